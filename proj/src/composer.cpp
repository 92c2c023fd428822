#include "spcot/composer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "spcot/errors.hpp"
#include "spcot/prompts.hpp"
#include "spcot/text.hpp"
#include "spcot/validate.hpp"

namespace spcot {

bool composable(const QAQuadruplet& prev, const QAQuadruplet& next) {
    if (trim(prev.answer).empty()) return false;
    return contains_normalized(next.question, prev.answer);
}

namespace {

std::vector<QAQuadruplet> hop_pool(const std::vector<TwoHopPair>& pairs) {
    std::vector<QAQuadruplet> pool;
    std::unordered_set<std::string> seen;
    for (const auto& pair : pairs) {
        for (const auto* hop : {&pair.first, &pair.second}) {
            if (seen.insert(hop->hop_id).second) pool.push_back(*hop);
        }
    }
    return pool;
}

std::string chain_identity(const std::string& type_id, const std::vector<int>& hops,
                           const std::vector<QAQuadruplet>& pool) {
    std::vector<std::string> ids;
    ids.reserve(hops.size());
    for (int h : hops) ids.push_back(pool[static_cast<size_t>(h)].hop_id);
    std::sort(ids.begin(), ids.end());
    std::string key = type_id;
    for (const auto& id : ids) key += "|" + id;
    return key;
}

}  // namespace

std::vector<ReasoningChain> compose_chains(const std::vector<TwoHopPair>& pairs,
                                           const std::vector<ReasoningGraphSpec>& registry,
                                           const CompositionConfig& config) {
    (void)config;  // enumeration is order-deterministic; the seed drives later sampling
    for (const auto& spec : registry) check_graph_spec(spec);

    const auto pool = hop_pool(pairs);
    const int pool_size = static_cast<int>(pool.size());

    std::vector<std::vector<int>> successors(static_cast<size_t>(pool_size));
    std::vector<std::vector<bool>> edge(static_cast<size_t>(pool_size),
                                        std::vector<bool>(static_cast<size_t>(pool_size), false));
    for (int u = 0; u < pool_size; ++u) {
        for (int v = 0; v < pool_size; ++v) {
            if (u == v) continue;
            if (composable(pool[static_cast<size_t>(u)], pool[static_cast<size_t>(v)])) {
                edge[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
                successors[static_cast<size_t>(u)].push_back(v);
            }
        }
    }

    std::vector<ReasoningChain> chains;
    std::unordered_set<std::string> emitted;

    for (const auto& spec : registry) {
        const int m = spec.hop_count;
        if (pool_size < m) continue;

        std::vector<std::vector<int>> incoming(static_cast<size_t>(m));
        for (auto [u, v] : spec.edges) incoming[static_cast<size_t>(v)].push_back(u);

        std::vector<int> chosen(static_cast<size_t>(m), -1);
        std::vector<bool> used(static_cast<size_t>(pool_size), false);

        std::function<void(int)> assign = [&](int node) {
            if (node == m) {
                std::vector<QAQuadruplet> hops;
                hops.reserve(static_cast<size_t>(m));
                for (int i = 0; i < m; ++i) {
                    hops.push_back(pool[static_cast<size_t>(chosen[static_cast<size_t>(i)])]);
                }
                ReasoningChain chain = make_chain(spec.type_id, std::move(hops));
                if (!validate_chain(chain).empty()) return;
                std::string key = chain_identity(spec.type_id, chosen, pool);
                if (emitted.insert(key).second) chains.push_back(std::move(chain));
                return;
            }
            const auto& preds = incoming[static_cast<size_t>(node)];
            auto try_candidate = [&](int c) {
                if (used[static_cast<size_t>(c)]) return;
                for (int u : preds) {
                    if (!edge[static_cast<size_t>(chosen[static_cast<size_t>(u)])]
                             [static_cast<size_t>(c)]) {
                        return;
                    }
                }
                chosen[static_cast<size_t>(node)] = c;
                used[static_cast<size_t>(c)] = true;
                assign(node + 1);
                used[static_cast<size_t>(c)] = false;
                chosen[static_cast<size_t>(node)] = -1;
            };
            if (!preds.empty()) {
                // Walk the first predecessor's successor list; remaining
                // predecessors are checked inside.
                for (int c : successors[static_cast<size_t>(chosen[static_cast<size_t>(preds[0])])]) {
                    try_candidate(c);
                }
            } else {
                for (int c = 0; c < pool_size; ++c) try_candidate(c);
            }
        };
        assign(0);
    }
    return chains;
}

namespace {

std::set<std::string> normalized_questions(const ReasoningChain& chain) {
    std::set<std::string> out;
    for (const auto& hop : chain.hops) out.insert(normalized_text(hop.question));
    return out;
}

}  // namespace

int duplication_degree(const ReasoningChain& chain, const std::vector<ReasoningChain>& peers) {
    std::set<std::string> shared_pool;
    for (const auto& peer : peers) {
        if (peer.graph_type != chain.graph_type) continue;
        for (const auto& q : normalized_questions(peer)) shared_pool.insert(q);
    }
    int degree = 0;
    for (const auto& q : normalized_questions(chain)) {
        if (shared_pool.count(q)) ++degree;
    }
    return degree;
}

std::vector<ReasoningChain> filter_by_duplication(const std::vector<ReasoningChain>& chains,
                                                  const CompositionConfig& config) {
    std::vector<ReasoningChain> retained;
    for (const auto& chain : chains) {
        if (duplication_degree(chain, retained) <= config.max_duplication_degree) {
            retained.push_back(chain);
        }
    }
    return retained;
}

std::vector<BinaryVariant> generate_binary_variants(const std::vector<ReasoningChain>& chains,
                                                    const CompositionConfig& config,
                                                    LlmGateway& gateway,
                                                    std::vector<std::string>* notes) {
    if (config.binary_fraction_positive < 0.0 || config.binary_fraction_positive > 0.5 ||
        config.binary_fraction_negative < 0.0 || config.binary_fraction_negative > 0.5) {
        throw std::invalid_argument("binary fractions must be within [0, 0.5]");
    }
    auto note = [&](const std::string& msg) {
        if (notes) notes->push_back(msg);
    };

    // Group chain indices by type, keeping first-appearance order of types.
    std::vector<std::string> type_order;
    std::map<std::string, std::vector<size_t>> by_type;
    for (size_t i = 0; i < chains.size(); ++i) {
        auto& bucket = by_type[chains[i].graph_type];
        if (bucket.empty()) type_order.push_back(chains[i].graph_type);
        bucket.push_back(i);
    }

    std::mt19937 rng(static_cast<std::mt19937::result_type>(config.random_seed));
    std::vector<BinaryVariant> variants;

    for (const auto& type : type_order) {
        auto indices = by_type[type];
        const size_t count = indices.size();
        const auto n_pos = static_cast<size_t>(config.binary_fraction_positive *
                                               static_cast<double>(count));
        const auto n_neg = static_cast<size_t>(config.binary_fraction_negative *
                                               static_cast<double>(count));
        if (n_pos + n_neg == 0) continue;
        std::shuffle(indices.begin(), indices.end(), rng);

        std::vector<size_t> positives(indices.begin(),
                                      indices.begin() + static_cast<long>(n_pos));
        std::vector<size_t> negatives(indices.begin() + static_cast<long>(n_pos),
                                      indices.begin() + static_cast<long>(n_pos + n_neg));
        std::sort(positives.begin(), positives.end());
        std::sort(negatives.begin(), negatives.end());

        auto reform = [&](size_t index, bool positive) {
            const ReasoningChain& source = chains[index];
            const QAQuadruplet& last = source.hops.back();
            std::string response = gateway.complete(
                TaskKind::BinaryReform,
                prompts::binary_reform_with_demos(last.question, last.answer, positive));
            std::string reformed = trim(response);
            if (auto eol = reformed.find('\n'); eol != std::string::npos) {
                reformed = trim(reformed.substr(0, eol));
            }
            if (reformed.empty()) {
                note("binary reform dropped (empty output) for " + last.hop_id);
                return;
            }
            if (!positive && contains_normalized(reformed, last.answer)) {
                note("negative reform dropped (still contains the answer) for " + last.hop_id);
                return;
            }
            ReasoningChain variant = source;
            variant.hops.back().question = reformed;
            variant.hops.back().answer = positive ? "yes" : "no";
            variant.final_answer = variant.hops.back().answer;
            if (!validate_chain(variant).empty()) {
                note("binary reform dropped (reformed chain no longer validates) for " +
                     last.hop_id);
                return;
            }
            variants.push_back({std::move(variant), positive ? "yes" : "no", index});
        };
        for (size_t index : positives) reform(index, true);
        for (size_t index : negatives) reform(index, false);
    }
    return variants;
}

std::string nest_question(const ReasoningChain& chain) {
    if (!validate_chain(chain).empty()) {
        throw std::invalid_argument("nest_question requires a valid chain");
    }
    const size_t n = chain.hops.size();

    // Successor of hop i: the unique later hop whose question mentions its
    // answer (guaranteed by validation).
    std::vector<std::vector<size_t>> predecessors(n);
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (j != i && contains_normalized(chain.hops[j].question, chain.hops[i].answer)) {
                predecessors[j].push_back(i);
                break;
            }
        }
    }

    std::vector<std::string> built(n);
    for (size_t i = 0; i < n; ++i) {
        std::string question = chain.hops[i].question;
        for (size_t p : predecessors[i]) {
            std::string bracketed = "[" + built[p] + "]";
            if (replace_normalized(question, chain.hops[p].answer, bracketed) == 0) {
                throw InternalError("expected substitution target missing in hop question");
            }
        }
        built[i] = std::move(question);
    }
    return built[n - 1];
}

std::string naturalize_question(const std::string& raw, LlmGateway& gateway) {
    if (raw.find('[') == std::string::npos) {
        throw std::invalid_argument("raw question must contain a bracketed clause");
    }
    std::string response =
        trim(gateway.complete(TaskKind::MultihopReform, prompts::naturalize_with_demos(raw)));
    if (auto eol = response.find('\n'); eol != std::string::npos) {
        response = trim(response.substr(0, eol));
    }
    if (response.empty() || response.find('[') != std::string::npos) {
        throw ReformFailure("naturalization output rejected for raw question: " + raw);
    }
    return response;
}

Stage2Result run_stage2(const std::vector<TwoHopPair>& pairs,
                        const std::vector<ReasoningGraphSpec>& registry,
                        const CompositionConfig& config, LlmGateway& gateway) {
    Stage2Result result;

    auto chains = compose_chains(pairs, registry, config);
    chains = filter_by_duplication(chains, config);
    auto variants = generate_binary_variants(chains, config, gateway, &result.skipped);

    IdAllocator group_ids('g');
    auto emit = [&](const ReasoningChain& chain, const std::string& answer, bool is_binary) {
        if (!validate_chain(chain).empty()) {
            throw InternalError("chain failed validation at emission");
        }
        std::string raw = nest_question(chain);
        std::string natural;
        try {
            natural = naturalize_question(raw, gateway);
        } catch (const ReformFailure& e) {
            result.skipped.push_back(e.what());
            return;
        }
        MHQAGroup group;
        group.group_id = group_ids.next();
        group.multihop_question = natural;
        group.answer = answer;
        group.chain = chain;
        group.is_binary = is_binary;
        result.groups.push_back(std::move(group));
    };

    for (const auto& chain : chains) emit(chain, chain.final_answer, false);
    for (const auto& variant : variants) emit(variant.chain, variant.answer, true);
    return result;
}

}  // namespace spcot
