#include "spcot/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace spcot {

namespace {

int nearest_centroid(const EmbeddingVector& point, const std::vector<EmbeddingVector>& centroids) {
    int best = 0;
    double best_dist = std::numeric_limits<double>::max();
    for (int c = 0; c < static_cast<int>(centroids.size()); ++c) {
        double d = squared_distance(point, centroids[static_cast<size_t>(c)]);
        if (d < best_dist) {
            best_dist = d;
            best = c;
        }
    }
    return best;
}

std::vector<EmbeddingVector> seed_centroids(const std::vector<EmbeddingVector>& vectors,
                                            int n_clusters, std::mt19937& rng) {
    const size_t n = vectors.size();
    std::vector<EmbeddingVector> centroids;
    std::vector<bool> taken(n, false);

    std::uniform_int_distribution<size_t> uniform(0, n - 1);
    size_t first = uniform(rng);
    centroids.push_back(vectors[first]);
    taken[first] = true;

    std::vector<double> dist(n, 0.0);
    while (static_cast<int>(centroids.size()) < n_clusters) {
        double total = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::max();
            for (const auto& c : centroids) best = std::min(best, squared_distance(vectors[i], c));
            dist[i] = taken[i] ? 0.0 : best;
            total += dist[i];
        }
        size_t pick = n;
        if (total > 0.0) {
            std::uniform_real_distribution<double> u(0.0, total);
            double target = u(rng);
            double acc = 0.0;
            for (size_t i = 0; i < n; ++i) {
                acc += dist[i];
                if (dist[i] > 0.0 && acc >= target) {
                    pick = i;
                    break;
                }
            }
        }
        if (pick == n) {
            // All remaining mass is zero (duplicate points): take the first
            // untaken index.
            for (size_t i = 0; i < n; ++i) {
                if (!taken[i]) {
                    pick = i;
                    break;
                }
            }
        }
        taken[pick] = true;
        centroids.push_back(vectors[pick]);
    }
    return centroids;
}

}  // namespace

KMeansResult kmeans(const std::vector<EmbeddingVector>& vectors, int n_clusters, long random_seed,
                    int max_iterations) {
    const size_t n = vectors.size();
    if (n_clusters <= 0) throw std::invalid_argument("n_clusters must be positive");
    if (static_cast<size_t>(n_clusters) > n) {
        throw std::invalid_argument("n_clusters exceeds the number of points");
    }
    const size_t dim = vectors.front().size();

    std::mt19937 rng(static_cast<std::mt19937::result_type>(random_seed));
    KMeansResult result;
    result.centroids = seed_centroids(vectors, n_clusters, rng);
    result.assignments.assign(n, -1);

    for (int iter = 0; iter < max_iterations; ++iter) {
        result.iterations = iter + 1;
        bool changed = false;
        for (size_t i = 0; i < n; ++i) {
            int c = nearest_centroid(vectors[i], result.centroids);
            if (c != result.assignments[i]) {
                result.assignments[i] = c;
                changed = true;
            }
        }

        // Rebuild any empty cluster from the largest cluster's farthest point.
        while (true) {
            std::vector<size_t> sizes(static_cast<size_t>(n_clusters), 0);
            for (int a : result.assignments) ++sizes[static_cast<size_t>(a)];
            int empty = -1;
            for (int c = 0; c < n_clusters; ++c) {
                if (sizes[static_cast<size_t>(c)] == 0) {
                    empty = c;
                    break;
                }
            }
            if (empty < 0) break;
            int largest = 0;
            for (int c = 1; c < n_clusters; ++c) {
                if (sizes[static_cast<size_t>(c)] > sizes[static_cast<size_t>(largest)]) {
                    largest = c;
                }
            }
            size_t farthest = n;
            double far_dist = -1.0;
            for (size_t i = 0; i < n; ++i) {
                if (result.assignments[i] != largest) continue;
                double d = squared_distance(vectors[i],
                                            result.centroids[static_cast<size_t>(largest)]);
                if (d > far_dist) {
                    far_dist = d;
                    farthest = i;
                }
            }
            result.assignments[farthest] = empty;
            result.centroids[static_cast<size_t>(empty)] = vectors[farthest];
            changed = true;
        }

        for (int c = 0; c < n_clusters; ++c) {
            EmbeddingVector mean(dim, 0.0);
            size_t count = 0;
            for (size_t i = 0; i < n; ++i) {
                if (result.assignments[i] != c) continue;
                for (size_t d = 0; d < dim; ++d) mean[d] += vectors[i][d];
                ++count;
            }
            for (size_t d = 0; d < dim; ++d) mean[d] /= static_cast<double>(count);
            result.centroids[static_cast<size_t>(c)] = std::move(mean);
        }
        if (!changed) break;
    }
    return result;
}

double within_cluster_sum_of_squares(const std::vector<EmbeddingVector>& vectors,
                                     const KMeansResult& result) {
    double total = 0.0;
    for (size_t i = 0; i < vectors.size(); ++i) {
        total += squared_distance(vectors[i],
                                  result.centroids[static_cast<size_t>(result.assignments[i])]);
    }
    return total;
}

}  // namespace spcot
