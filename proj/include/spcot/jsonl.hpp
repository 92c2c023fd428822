#pragma once

#include <string>
#include <vector>

#include "spcot/evaluator.hpp"
#include "spcot/inference.hpp"
#include "spcot/types.hpp"

namespace spcot {

// Stage 1 output. Hops keep every field for provenance.
void write_pairs_jsonl(const std::vector<TwoHopPair>& pairs, const std::string& path);
std::vector<TwoHopPair> read_pairs_jsonl(const std::string& path);

// Dataset records carry questions/answers/explanations only; passages stay
// in the stage-1 file.
void write_groups_jsonl(const std::vector<MHQAGroup>& groups, const std::string& path);
std::vector<MHQAGroup> read_groups_jsonl(const std::string& path);

void write_records_jsonl(const std::vector<InferenceRecord>& records, const std::string& path);
std::vector<InferenceRecord> read_records_jsonl(const std::string& path);

// Benchmark/gold form {"id", "question", "answers": [..]}.
std::vector<GoldExample> read_benchmark_jsonl(const std::string& path);
void write_benchmark_jsonl(const std::vector<GoldExample>& examples, const std::string& path);

// Predictions: {"id", "answer"} or inference records (parsed_answer wins).
std::vector<Prediction> read_predictions_jsonl(const std::string& path);

}  // namespace spcot
