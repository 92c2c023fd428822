#include "spcot/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "spcot/errors.hpp"
#include "spcot/prompts.hpp"

namespace spcot {

Strategy strategy_from_string(const std::string& name) {
    if (name == "random") return Strategy::Random;
    if (name == "retrieve") return Strategy::Retrieve;
    if (name == "cluster_center") return Strategy::ClusterCenter;
    if (name == "retrieve_in_cluster") return Strategy::RetrieveInCluster;
    if (name == "retrieve_in_type_cluster") return Strategy::RetrieveInTypeCluster;
    throw ConfigError("unknown sampling strategy: " + name);
}

std::string to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::Random: return "random";
        case Strategy::Retrieve: return "retrieve";
        case Strategy::ClusterCenter: return "cluster_center";
        case Strategy::RetrieveInCluster: return "retrieve_in_cluster";
        case Strategy::RetrieveInTypeCluster: return "retrieve_in_type_cluster";
    }
    return "unknown";
}

Demonstration render_demonstration(const MHQAGroup& group) {
    if (group.chain.hops.empty()) throw std::invalid_argument("group chain must be non-empty");
    Demonstration demo;
    demo.question = group.multihop_question;
    demo.answer = group.answer;
    std::string cot;
    for (size_t i = 0; i < group.chain.hops.size(); ++i) {
        cot += prompts::kStepPrefix + std::to_string(i + 1) + ": " +
               group.chain.hops[i].explanation + "\n";
    }
    cot += prompts::kAnswerSentence + group.answer;
    demo.cot_text = cot;
    return demo;
}

SamplerIndex build_index(const std::vector<MHQAGroup>& groups, Embedder& embedder, int n_clusters,
                         long random_seed) {
    if (groups.empty()) throw EmptyDataset("cannot build an index over an empty dataset");
    SamplerIndex index;
    index.random_seed = random_seed;

    std::vector<std::string> questions;
    for (const auto& group : groups) {
        IndexEntry entry;
        entry.group_id = group.group_id;
        entry.question = group.multihop_question;
        entry.graph_type = group.chain.graph_type;
        entry.demonstration = render_demonstration(group);
        index.entries.push_back(std::move(entry));
        questions.push_back(group.multihop_question);
    }
    index.vectors = embedder.embed(questions);

    index.n_clusters = std::min<int>(n_clusters, static_cast<int>(index.entries.size()));
    auto clustering = kmeans(index.vectors, index.n_clusters, random_seed);
    index.assignments = std::move(clustering.assignments);
    index.centroids = std::move(clustering.centroids);
    return index;
}

void save_index(const SamplerIndex& index, const std::string& path) {
    nlohmann::json doc;
    doc["n_clusters"] = index.n_clusters;
    doc["random_seed"] = index.random_seed;
    doc["assignments"] = index.assignments;
    doc["centroids"] = index.centroids;
    doc["vectors"] = index.vectors;
    auto& entries = doc["entries"] = nlohmann::json::array();
    for (const auto& entry : index.entries) {
        entries.push_back({{"group_id", entry.group_id},
                           {"question", entry.question},
                           {"graph_type", entry.graph_type},
                           {"cot_text", entry.demonstration.cot_text},
                           {"answer", entry.demonstration.answer}});
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write index file: " + path);
    out << doc.dump(2) << "\n";
}

SamplerIndex load_index(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open index file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad index file " + path + ": " + e.what());
    }
    SamplerIndex index;
    index.n_clusters = doc.at("n_clusters").get<int>();
    index.random_seed = doc.at("random_seed").get<long>();
    index.assignments = doc.at("assignments").get<std::vector<int>>();
    index.centroids = doc.at("centroids").get<std::vector<EmbeddingVector>>();
    index.vectors = doc.at("vectors").get<std::vector<EmbeddingVector>>();
    for (const auto& item : doc.at("entries")) {
        IndexEntry entry;
        entry.group_id = item.at("group_id").get<std::string>();
        entry.question = item.at("question").get<std::string>();
        entry.graph_type = item.at("graph_type").get<std::string>();
        entry.demonstration.question = entry.question;
        entry.demonstration.cot_text = item.at("cot_text").get<std::string>();
        entry.demonstration.answer = item.at("answer").get<std::string>();
        index.entries.push_back(std::move(entry));
    }
    return index;
}

namespace {

SampledDemo make_pick(const SamplerIndex& index, size_t i, int cluster, double similarity) {
    SampledDemo pick;
    pick.demonstration = index.entries[i].demonstration;
    pick.group_id = index.entries[i].group_id;
    pick.cluster = cluster;
    pick.similarity = similarity;
    return pick;
}

// Indices ordered by similarity to the query, highest first, ties toward
// the lowest group_id.
std::vector<size_t> ranked_by_similarity(const SamplerIndex& index,
                                         const std::vector<double>& similarity,
                                         const std::vector<size_t>& candidates) {
    std::vector<size_t> order = candidates;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (similarity[a] != similarity[b]) return similarity[a] > similarity[b];
        return index.entries[a].group_id < index.entries[b].group_id;
    });
    return order;
}

std::vector<size_t> all_indices(size_t n) {
    std::vector<size_t> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Per cluster of `clustering` (over `members`), the member maximizing
// `score`, ties toward the lowest group_id. Ordered by cluster id.
std::vector<size_t> per_cluster_argmax(const SamplerIndex& index,
                                       const std::vector<size_t>& members,
                                       const std::vector<int>& assignment, int n_clusters,
                                       const std::function<double(size_t)>& score,
                                       std::vector<int>* cluster_of_pick) {
    std::vector<size_t> picks;
    for (int c = 0; c < n_clusters; ++c) {
        bool found = false;
        size_t best = 0;
        double best_score = 0.0;
        for (size_t m = 0; m < members.size(); ++m) {
            if (assignment[m] != c) continue;
            double s = score(members[m]);
            if (!found || s > best_score ||
                (s == best_score &&
                 index.entries[members[m]].group_id < index.entries[best].group_id)) {
                best = members[m];
                best_score = s;
                found = true;
            }
        }
        if (found) {
            picks.push_back(best);
            if (cluster_of_pick) cluster_of_pick->push_back(c);
        }
    }
    return picks;
}

}  // namespace

std::vector<SampledDemo> sample(const SamplerIndex& index, Strategy strategy,
                                const std::string& query, int n, int knn_k, Embedder& embedder) {
    const size_t total = index.entries.size();
    if (total == 0) throw EmptyDataset("sampler index is empty");
    if (n <= 0) throw std::invalid_argument("n must be positive");
    const size_t want = std::min<size_t>(static_cast<size_t>(n), total);

    if (strategy == Strategy::Random) {
        std::vector<size_t> order = all_indices(total);
        std::mt19937 rng(static_cast<std::mt19937::result_type>(index.random_seed));
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<SampledDemo> out;
        for (size_t i = 0; i < want; ++i) {
            out.push_back(make_pick(index, order[i], index.assignments[order[i]], 0.0));
        }
        return out;
    }

    EmbeddingVector query_vec = embedder.embed({query}).front();
    std::vector<double> similarity(total);
    for (size_t i = 0; i < total; ++i) similarity[i] = dot(query_vec, index.vectors[i]);

    auto finish = [&](const std::vector<size_t>& picks, const std::vector<int>& clusters) {
        std::vector<SampledDemo> out;
        for (size_t i = 0; i < picks.size(); ++i) {
            out.push_back(make_pick(index, picks[i], clusters[i], similarity[picks[i]]));
        }
        return out;
    };

    // Fills up with globally ranked entries when cluster-restricted picks
    // fall short of the promised min(n, dataset size).
    auto pad_to_want = [&](std::vector<size_t>& picks, std::vector<int>& clusters) {
        if (picks.size() >= want) return;
        std::vector<bool> taken(total, false);
        for (size_t p : picks) taken[p] = true;
        for (size_t i : ranked_by_similarity(index, similarity, all_indices(total))) {
            if (picks.size() >= want) break;
            if (taken[i]) continue;
            picks.push_back(i);
            clusters.push_back(-1);
        }
    };

    switch (strategy) {
        case Strategy::Retrieve: {
            auto order = ranked_by_similarity(index, similarity, all_indices(total));
            order.resize(want);
            std::vector<SampledDemo> out;
            for (size_t i : order) out.push_back(make_pick(index, i, index.assignments[i],
                                                           similarity[i]));
            return out;
        }
        case Strategy::ClusterCenter:
        case Strategy::RetrieveInCluster: {
            // Reuse the stored clustering when it matches min(n, size);
            // otherwise cluster afresh at the requested granularity.
            std::vector<int> assignment = index.assignments;
            std::vector<EmbeddingVector> centroids = index.centroids;
            int k = index.n_clusters;
            if (static_cast<size_t>(k) != want) {
                auto clustering =
                    kmeans(index.vectors, static_cast<int>(want), index.random_seed);
                assignment = std::move(clustering.assignments);
                centroids = std::move(clustering.centroids);
                k = static_cast<int>(want);
            }
            auto members = all_indices(total);
            std::vector<int> clusters;
            std::function<double(size_t)> score;
            if (strategy == Strategy::ClusterCenter) {
                score = [&](size_t i) {
                    return -squared_distance(index.vectors[i],
                                             centroids[static_cast<size_t>(assignment[i])]);
                };
            } else {
                score = [&](size_t i) { return similarity[i]; };
            }
            auto picks = per_cluster_argmax(index, members, assignment, k, score, &clusters);
            pad_to_want(picks, clusters);
            return finish(picks, clusters);
        }
        case Strategy::RetrieveInTypeCluster: {
            // Vote the query's reasoning type with its k nearest neighbours.
            auto order = ranked_by_similarity(index, similarity, all_indices(total));
            order.resize(std::min<size_t>(static_cast<size_t>(std::max(knn_k, 1)), total));
            std::map<std::string, int> votes;
            std::map<std::string, double> best_sim;
            for (size_t i : order) {
                const auto& type = index.entries[i].graph_type;
                ++votes[type];
                best_sim.emplace(type, similarity[i]);
            }
            std::string winner;
            for (const auto& [type, count] : votes) {
                if (winner.empty() || count > votes[winner] ||
                    (count == votes[winner] && best_sim[type] > best_sim[winner])) {
                    winner = type;
                }
            }

            std::vector<size_t> members;
            for (size_t i = 0; i < total; ++i) {
                if (index.entries[i].graph_type == winner) members.push_back(i);
            }
            int k = static_cast<int>(std::min<size_t>(want, members.size()));
            std::vector<EmbeddingVector> member_vectors;
            for (size_t i : members) member_vectors.push_back(index.vectors[i]);
            auto clustering = kmeans(member_vectors, k, index.random_seed);
            std::vector<int> clusters;
            std::function<double(size_t)> score = [&](size_t i) { return similarity[i]; };
            auto picks =
                per_cluster_argmax(index, members, clustering.assignments, k, score, &clusters);
            pad_to_want(picks, clusters);
            return finish(picks, clusters);
        }
        default:
            throw std::invalid_argument("unsupported strategy");
    }
}

}  // namespace spcot
