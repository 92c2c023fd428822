#pragma once

#include <vector>

#include "spcot/embedder.hpp"

namespace spcot {

struct KMeansResult {
    std::vector<int> assignments;
    std::vector<EmbeddingVector> centroids;
    int iterations = 0;
};

// Lloyd's algorithm from distance-weighted seeding, run until assignments
// are stable or `max_iterations` passes. Deterministic for a given seed.
// Empty clusters are rebuilt from the largest cluster's farthest point.
// Requires n_clusters <= vectors.size().
KMeansResult kmeans(const std::vector<EmbeddingVector>& vectors, int n_clusters, long random_seed,
                    int max_iterations = 100);

double within_cluster_sum_of_squares(const std::vector<EmbeddingVector>& vectors,
                                     const KMeansResult& result);

}  // namespace spcot
