#include "spcot/jsonl.hpp"

#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

#include "spcot/errors.hpp"

namespace spcot {

namespace {

using nlohmann::json;

void for_each_line(const std::string& path, const std::function<void(const json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            fn(json::parse(line));
        } catch (const json::exception& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    return out;
}

json quad_to_json(const QAQuadruplet& quad) {
    return json{{"keyword", quad.keyword},       {"passage", quad.passage},
                {"question", quad.question},     {"answer", quad.answer},
                {"answer_label", to_string(quad.answer_label)},
                {"explanation", quad.explanation}, {"hop_id", quad.hop_id}};
}

QAQuadruplet quad_from_json(const json& obj) {
    QAQuadruplet quad;
    quad.keyword = obj.at("keyword").get<std::string>();
    quad.passage = obj.at("passage").get<std::string>();
    quad.question = obj.at("question").get<std::string>();
    quad.answer = obj.at("answer").get<std::string>();
    quad.answer_label = entity_label_from_string(obj.at("answer_label").get<std::string>());
    quad.explanation = obj.at("explanation").get<std::string>();
    quad.hop_id = obj.at("hop_id").get<std::string>();
    return quad;
}

}  // namespace

void write_pairs_jsonl(const std::vector<TwoHopPair>& pairs, const std::string& path) {
    auto out = open_out(path);
    for (const auto& pair : pairs) {
        json obj{{"first", quad_to_json(pair.first)}, {"second", quad_to_json(pair.second)}};
        out << obj.dump() << "\n";
    }
}

std::vector<TwoHopPair> read_pairs_jsonl(const std::string& path) {
    std::vector<TwoHopPair> pairs;
    for_each_line(path, [&](const json& obj) {
        pairs.push_back({quad_from_json(obj.at("first")), quad_from_json(obj.at("second"))});
    });
    return pairs;
}

void write_groups_jsonl(const std::vector<MHQAGroup>& groups, const std::string& path) {
    auto out = open_out(path);
    for (const auto& group : groups) {
        json hops = json::array();
        for (const auto& hop : group.chain.hops) {
            hops.push_back({{"question", hop.question},
                            {"answer", hop.answer},
                            {"explanation", hop.explanation}});
        }
        json obj{{"group_id", group.group_id},
                 {"multihop_question", group.multihop_question},
                 {"answer", group.answer},
                 {"is_binary", group.is_binary},
                 {"graph_type", group.chain.graph_type},
                 {"hops", hops}};
        out << obj.dump() << "\n";
    }
}

std::vector<MHQAGroup> read_groups_jsonl(const std::string& path) {
    std::vector<MHQAGroup> groups;
    for_each_line(path, [&](const json& obj) {
        MHQAGroup group;
        group.group_id = obj.at("group_id").get<std::string>();
        group.multihop_question = obj.at("multihop_question").get<std::string>();
        group.answer = obj.at("answer").get<std::string>();
        group.is_binary = obj.at("is_binary").get<bool>();
        group.chain.graph_type = obj.at("graph_type").get<std::string>();
        for (const auto& hop : obj.at("hops")) {
            QAQuadruplet quad;
            quad.question = hop.at("question").get<std::string>();
            quad.answer = hop.at("answer").get<std::string>();
            quad.explanation = hop.at("explanation").get<std::string>();
            group.chain.hops.push_back(std::move(quad));
        }
        if (!group.chain.hops.empty()) group.chain.final_answer = group.chain.hops.back().answer;
        groups.push_back(std::move(group));
    });
    return groups;
}

void write_records_jsonl(const std::vector<InferenceRecord>& records, const std::string& path) {
    auto out = open_out(path);
    for (const auto& record : records) {
        json obj{{"id", record.id},
                 {"question", record.question},
                 {"mode", to_string(record.mode)},
                 {"raw_response", record.raw_response},
                 {"parsed_answer", record.parsed_answer},
                 {"demo_ids", record.demo_ids},
                 {"parse_failed", record.parse_failed}};
        out << obj.dump() << "\n";
    }
}

std::vector<InferenceRecord> read_records_jsonl(const std::string& path) {
    std::vector<InferenceRecord> records;
    for_each_line(path, [&](const json& obj) {
        InferenceRecord record;
        record.id = obj.at("id").get<std::string>();
        record.question = obj.at("question").get<std::string>();
        record.mode = inference_mode_from_string(obj.at("mode").get<std::string>());
        record.raw_response = obj.at("raw_response").get<std::string>();
        record.parsed_answer = obj.at("parsed_answer").get<std::string>();
        record.demo_ids = obj.at("demo_ids").get<std::vector<std::string>>();
        record.parse_failed = obj.at("parse_failed").get<bool>();
        records.push_back(std::move(record));
    });
    return records;
}

std::vector<GoldExample> read_benchmark_jsonl(const std::string& path) {
    std::vector<GoldExample> examples;
    for_each_line(path, [&](const json& obj) {
        GoldExample example;
        example.id = obj.at("id").get<std::string>();
        example.question = obj.value("question", std::string());
        example.answers = obj.at("answers").get<std::vector<std::string>>();
        examples.push_back(std::move(example));
    });
    return examples;
}

void write_benchmark_jsonl(const std::vector<GoldExample>& examples, const std::string& path) {
    auto out = open_out(path);
    for (const auto& example : examples) {
        json obj{{"id", example.id}, {"question", example.question}, {"answers", example.answers}};
        out << obj.dump() << "\n";
    }
}

std::vector<Prediction> read_predictions_jsonl(const std::string& path) {
    std::vector<Prediction> preds;
    for_each_line(path, [&](const json& obj) {
        Prediction pred;
        pred.id = obj.at("id").get<std::string>();
        if (obj.contains("answer")) {
            pred.answer = obj.at("answer").get<std::string>();
        } else if (obj.contains("parsed_answer")) {
            pred.answer = obj.at("parsed_answer").get<std::string>();
        } else {
            throw ConfigError("prediction line missing \"answer\"");
        }
        preds.push_back(std::move(pred));
    });
    return preds;
}

}  // namespace spcot
