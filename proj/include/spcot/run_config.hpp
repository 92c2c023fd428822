#pragma once

#include <string>

#include "spcot/composer.hpp"
#include "spcot/twohop.hpp"

namespace spcot {

// Flat sectioned key=value configuration. Every field has a working
// default; the file form round-trips losslessly through load/save.
struct RunConfig {
    // [llm]
    std::string llm_provider = "scripted";  // scripted | http
    std::string llm_endpoint = "https://api.openai.com/v1";
    std::string llm_model = "gpt-3.5-turbo-0301";
    std::string api_key_env = "SPCOT_API_KEY";
    int max_concurrency = 4;
    int retry_attempts = 3;
    int retry_base_delay_ms = 1000;
    std::string fixtures_path;

    // [embedding]
    std::string embedding_provider = "local";  // local | http
    std::string embedding_endpoint = "https://api.openai.com/v1";
    std::string embedding_model = "text-embedding-ada-002";
    int embedding_dimension = 256;

    // [generation]
    int keyword_count = 10;
    int max_pairs = 100;
    int max_candidates_per_passage = 8;
    int min_passage_chars = 200;
    std::string accordance = "exact";  // exact | token_f1
    double accordance_f1_threshold = 0.8;
    std::string extractor = "heuristic";  // heuristic | llm
    std::string topics_file;

    // [composition]
    int max_duplication_degree = 1;
    double binary_fraction_positive = 0.10;
    double binary_fraction_negative = 0.10;
    std::string graphs_file;

    // [sampler]
    int n_demos = 8;
    int knn_k = 16;
    std::string strategy = "retrieve_in_cluster";

    // [inference]
    std::string inference_mode = "sp_cot";  // sp_cot | zero_shot

    // [run]
    long random_seed = 7;

    // [paths]
    std::string pairs_path = "pairs.jsonl";
    std::string groups_path = "groups.jsonl";
    std::string index_path;

    static RunConfig load(const std::string& path);
    void save(const std::string& path) const;

    // Canonical serialized form; basis of the config hash.
    std::string canonical() const;
    std::string hash() const;

    GenerationBudget generation_budget() const;
    TwohopConfig twohop_config() const;
    CompositionConfig composition_config() const;
};

}  // namespace spcot
