#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spcot/embedder.hpp"
#include "spcot/kmeans.hpp"
#include "spcot/types.hpp"

namespace spcot {

enum class Strategy {
    Random,
    Retrieve,
    ClusterCenter,
    RetrieveInCluster,
    RetrieveInTypeCluster,
};

Strategy strategy_from_string(const std::string& name);
std::string to_string(Strategy strategy);

struct IndexEntry {
    std::string group_id;
    std::string question;
    std::string graph_type;
    Demonstration demonstration;
};

// Immutable once built; safe for concurrent sample() calls.
struct SamplerIndex {
    std::vector<IndexEntry> entries;
    std::vector<EmbeddingVector> vectors;
    int n_clusters = 0;
    std::vector<int> assignments;
    std::vector<EmbeddingVector> centroids;
    long random_seed = 0;
};

// Renders the in-context form of one dataset group: "Step i:" lines over
// the hop explanations, closed by the final-answer sentence.
Demonstration render_demonstration(const MHQAGroup& group);

SamplerIndex build_index(const std::vector<MHQAGroup>& groups, Embedder& embedder, int n_clusters,
                         long random_seed);

void save_index(const SamplerIndex& index, const std::string& path);
SamplerIndex load_index(const std::string& path);

struct SampledDemo {
    Demonstration demonstration;
    std::string group_id;
    int cluster = -1;
    double similarity = 0.0;
};

// Selects min(n, index size) distinct demonstrations under the given
// strategy. Cluster strategies expect the index to be built with
// n_clusters = n. Ties always break toward the lowest group_id.
std::vector<SampledDemo> sample(const SamplerIndex& index, Strategy strategy,
                                const std::string& query, int n, int knn_k, Embedder& embedder);

}  // namespace spcot
