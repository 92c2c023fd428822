#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spcot/entity_extract.hpp"
#include "spcot/gateway.hpp"
#include "spcot/types.hpp"

namespace spcot {

struct TopicSeed {
    std::string topic;
    int keyword_count = 10;
};

struct GenerationBudget {
    int max_pairs = 100;
    int max_candidates_per_passage = 8;
    long random_seed = 0;
};

enum class HopPosition { First, Second };

enum class AccordanceMode { Exact, TokenF1 };

struct TwohopConfig {
    int min_passage_chars = 200;
    AccordanceMode accordance = AccordanceMode::Exact;
    double accordance_f1_threshold = 0.8;
};

// The 29 built-in generation topics.
const std::vector<std::string>& builtin_topics();
std::vector<TopicSeed> load_topics(const std::string& path, int keyword_count);

// Stage 1: drives keyword naming, passage generation and double-checked QA
// generation into validated two-hop pairs.
class TwohopGenerator {
public:
    TwohopGenerator(std::shared_ptr<LlmGateway> gateway, std::shared_ptr<Extractor> extractor,
                    TwohopConfig config = {});

    // Parses the model's enumerated keyword list; numbered and plain
    // newline-separated forms are accepted, duplicates dropped.
    std::vector<std::string> name_keywords(const TopicSeed& topic);

    std::string generate_passage(const std::string& keyword);

    // Runs question generation, the answer double-check and explanation
    // generation for one candidate. Returns nullopt when any gate fails;
    // those are expected filtering, not errors.
    std::optional<QAQuadruplet> generate_hop_qa(const std::string& passage,
                                                const std::string& keyword,
                                                const EntityMention& candidate, HopPosition hop,
                                                const std::optional<std::string>& prior_answer,
                                                const std::optional<std::string>& avoid_entity);

    std::vector<TwoHopPair> run_stage1(const std::vector<TopicSeed>& topics,
                                       const GenerationBudget& budget);

    using SkipLogger = std::function<void(const std::string&)>;
    void set_skip_logger(SkipLogger logger) { log_skip_ = std::move(logger); }

private:
    bool accordant(const std::string& recheck, const std::string& expected) const;

    std::shared_ptr<LlmGateway> gateway_;
    std::shared_ptr<Extractor> extractor_;
    TwohopConfig config_;
    IdAllocator hop_ids_{'h'};
    SkipLogger log_skip_;
};

}  // namespace spcot
