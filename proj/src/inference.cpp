#include "spcot/inference.hpp"

#include <algorithm>

#include "spcot/errors.hpp"
#include "spcot/prompts.hpp"
#include "spcot/text.hpp"

namespace spcot {

InferenceMode inference_mode_from_string(const std::string& name) {
    if (name == "zero_shot") return InferenceMode::ZeroShot;
    if (name == "sp_cot") return InferenceMode::SpCot;
    throw ConfigError("unknown inference mode: " + name);
}

std::string to_string(InferenceMode mode) {
    return mode == InferenceMode::ZeroShot ? "zero_shot" : "sp_cot";
}

std::string build_prompt(const std::vector<Demonstration>& demos, const std::string& question) {
    if (question.empty()) throw std::invalid_argument("question must be non-empty");
    return prompts::few_shot(demos, question);
}

namespace {

const char* kMarker = "the answer in just one entity is";

std::string strip_decorations(std::string s) {
    s = trim(s);
    if (!s.empty() && s.front() == ':') s = trim(s.substr(1));
    if (!s.empty() && s.back() == '.') s = trim(s.substr(0, s.size() - 1));
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\''))) {
        s = trim(s.substr(1, s.size() - 2));
        if (!s.empty() && s.back() == '.') s = trim(s.substr(0, s.size() - 1));
    }
    return s;
}

std::string last_nonempty_line(const std::string& text) {
    size_t end = text.size();
    while (end > 0) {
        size_t begin = text.rfind('\n', end - 1);
        size_t line_start = begin == std::string::npos ? 0 : begin + 1;
        std::string line = trim(text.substr(line_start, end - line_start));
        if (!line.empty()) return line;
        if (begin == std::string::npos) break;
        end = begin;
    }
    return "";
}

}  // namespace

ParsedAnswer parse_answer(const std::string& response) {
    std::string lower = lowercase_ascii(response);
    size_t at = lower.rfind(kMarker);
    std::string answer;
    if (at != std::string::npos) {
        size_t begin = at + std::string(kMarker).size();
        size_t end = response.find('\n', begin);
        if (end == std::string::npos) end = response.size();
        answer = strip_decorations(response.substr(begin, end - begin));
    } else {
        answer = strip_decorations(last_nonempty_line(response));
    }
    return {answer, answer.empty()};
}

InferenceRecord infer(const std::string& question, const SamplerIndex* index,
                      const InferenceOptions& options, LlmGateway& gateway, Embedder& embedder,
                      const std::string& id) {
    InferenceRecord record;
    record.id = id;
    record.question = question;
    record.mode = options.mode;

    std::vector<Demonstration> demos;
    if (options.mode == InferenceMode::SpCot) {
        if (!index) throw std::invalid_argument("sp_cot inference requires a sampler index");
        auto picks = sample(*index, options.strategy, question, options.n_demos, options.knn_k,
                            embedder);
        for (auto& pick : picks) {
            record.demo_ids.push_back(pick.group_id);
            demos.push_back(std::move(pick.demonstration));
        }
    }

    record.raw_response = gateway.complete(TaskKind::Inference, build_prompt(demos, question));
    auto parsed = parse_answer(record.raw_response);
    record.parsed_answer = parsed.answer;
    record.parse_failed = parsed.parse_failed;
    return record;
}

}  // namespace spcot
