#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spcot/embedder.hpp"
#include "spcot/gateway.hpp"
#include "spcot/sampler.hpp"

namespace spcot {

enum class InferenceMode { ZeroShot, SpCot };

InferenceMode inference_mode_from_string(const std::string& name);
std::string to_string(InferenceMode mode);

struct InferenceRecord {
    std::string id;
    std::string question;
    InferenceMode mode = InferenceMode::ZeroShot;
    std::string raw_response;
    std::string parsed_answer;
    std::vector<std::string> demo_ids;
    bool parse_failed = false;
};

// Byte-exact prompt assembly; zero demonstrations fall back to the
// zero-shot template.
std::string build_prompt(const std::vector<Demonstration>& demos, const std::string& question);

// Takes the text after the last "the answer in just one entity is" marker
// (case-insensitive) up to end of line, stripped of a leading colon,
// surrounding quotes and one trailing period; otherwise the last non-empty
// line. parse_failed iff the result is empty.
struct ParsedAnswer {
    std::string answer;
    bool parse_failed = false;
};
ParsedAnswer parse_answer(const std::string& response);

struct InferenceOptions {
    InferenceMode mode = InferenceMode::SpCot;
    int n_demos = 8;
    int knn_k = 16;
    Strategy strategy = Strategy::RetrieveInCluster;
};

InferenceRecord infer(const std::string& question, const SamplerIndex* index,
                      const InferenceOptions& options, LlmGateway& gateway, Embedder& embedder,
                      const std::string& id = "");

}  // namespace spcot
