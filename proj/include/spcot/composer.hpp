#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "spcot/gateway.hpp"
#include "spcot/reasoning_graphs.hpp"
#include "spcot/types.hpp"

namespace spcot {

struct CompositionConfig {
    int max_duplication_degree = 1;
    double binary_fraction_positive = 0.10;
    double binary_fraction_negative = 0.10;
    long random_seed = 0;
};

// Composability criterion: the previous hop's answer is mentioned in the
// next hop's question. Empty answers never compose.
bool composable(const QAQuadruplet& prev, const QAQuadruplet& next);

// Instantiates every registered shape over the hop-level composability
// graph and keeps only chains that validate. Deterministic enumeration:
// shapes in registry order, hops in pool order, one chain per (type, hop
// set).
std::vector<ReasoningChain> compose_chains(const std::vector<TwoHopPair>& pairs,
                                           const std::vector<ReasoningGraphSpec>& registry,
                                           const CompositionConfig& config);

// Number of this chain's questions (by normalized text) that co-exist in at
// least one peer chain of the same graph type.
int duplication_degree(const ReasoningChain& chain, const std::vector<ReasoningChain>& peers);

// Greedy scan in input order: a chain is retained iff its duplication
// degree against the already-retained same-type chains stays within the
// configured maximum. Idempotent.
std::vector<ReasoningChain> filter_by_duplication(const std::vector<ReasoningChain>& chains,
                                                  const CompositionConfig& config);

struct BinaryVariant {
    ReasoningChain chain;
    std::string answer;  // "yes" or "no"
    size_t source_index = 0;
};

// Per graph type, floor(fraction * count) chains are sampled for a positive
// reform and, disjointly, for a negative one. The reformed question replaces
// the last hop; originals stay in the dataset.
std::vector<BinaryVariant> generate_binary_variants(const std::vector<ReasoningChain>& chains,
                                                    const CompositionConfig& config,
                                                    LlmGateway& gateway,
                                                    std::vector<std::string>* notes = nullptr);

// Builds the bracketed raw question by substituting every intermediate
// answer occurrence in its successor question with the bracketed
// predecessor question, innermost first.
std::string nest_question(const ReasoningChain& chain);

// Sends the reform prompt with the shipped demonstrations; output must be a
// single line free of brackets.
std::string naturalize_question(const std::string& raw, LlmGateway& gateway);

struct Stage2Result {
    std::vector<MHQAGroup> groups;
    std::vector<std::string> skipped;  // per-chain failures, for the manifest
};

Stage2Result run_stage2(const std::vector<TwoHopPair>& pairs,
                        const std::vector<ReasoningGraphSpec>& registry,
                        const CompositionConfig& config, LlmGateway& gateway);

}  // namespace spcot
