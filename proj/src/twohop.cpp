#include "spcot/twohop.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "spcot/errors.hpp"
#include "spcot/evaluator.hpp"
#include "spcot/prompts.hpp"
#include "spcot/text.hpp"

namespace spcot {

namespace {

// Strips "3.", "3)", "-", "*" style list bullets from one line.
std::string strip_bullet(const std::string& line) {
    std::string s = trim(line);
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) {
        return trim(s.substr(i + 1));
    }
    if (!s.empty() && (s[0] == '-' || s[0] == '*')) return trim(s.substr(1));
    return s;
}

std::string clean_question(const std::string& response) {
    std::string q = trim(response);
    if (q.rfind("Question:", 0) == 0) q = trim(q.substr(9));
    return q;
}

}  // namespace

const std::vector<std::string>& builtin_topics() {
    static const std::vector<std::string> topics = {
        "politicians",
        "athletes",
        "sports teams",
        "sports events",
        "countries",
        "cities",
        "historical figures",
        "historical events",
        "wars",
        "religions",
        "singers",
        "songs",
        "actors or actresses",
        "movies or TV series",
        "writers",
        "books",
        "painters",
        "paintings",
        "composers",
        "classical music",
        "tourist attractions",
        "scientists",
        "scientific terms",
        "video games",
        "animals",
        "plants",
        "foods",
        "enterprises",
        "international organizations",
    };
    return topics;
}

std::vector<TopicSeed> load_topics(const std::string& path, int keyword_count) {
    std::vector<TopicSeed> topics;
    if (path.empty()) {
        for (const auto& topic : builtin_topics()) topics.push_back({topic, keyword_count});
        return topics;
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open topics file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        std::string topic = trim(line);
        if (!topic.empty()) topics.push_back({topic, keyword_count});
    }
    if (topics.empty()) throw ConfigError("topics file has no entries: " + path);
    return topics;
}

TwohopGenerator::TwohopGenerator(std::shared_ptr<LlmGateway> gateway,
                                 std::shared_ptr<Extractor> extractor, TwohopConfig config)
    : gateway_(std::move(gateway)), extractor_(std::move(extractor)), config_(config) {}

std::vector<std::string> TwohopGenerator::name_keywords(const TopicSeed& topic) {
    std::string response = gateway_->complete(
        TaskKind::KeywordNaming, prompts::name_keywords(topic.keyword_count, topic.topic));

    std::vector<std::string> keywords;
    std::unordered_set<std::string> seen;
    std::istringstream lines(response);
    std::string line;
    while (std::getline(lines, line)) {
        std::string keyword = strip_bullet(line);
        if (keyword.empty()) continue;
        std::string key = normalized_text(keyword);
        if (seen.count(key)) continue;
        seen.insert(key);
        keywords.push_back(keyword);
        if (static_cast<int>(keywords.size()) >= topic.keyword_count) break;
    }
    if (keywords.empty()) {
        throw ParseError("no keywords recovered from response for topic \"" + topic.topic + "\"");
    }
    return keywords;
}

std::string TwohopGenerator::generate_passage(const std::string& keyword) {
    if (keyword.empty()) throw std::invalid_argument("keyword must be non-empty");
    std::string passage =
        trim(gateway_->complete(TaskKind::PassageGeneration, prompts::generate_passage(keyword)));
    if (static_cast<int>(passage.size()) < config_.min_passage_chars) {
        throw GenerationTooShort("passage for \"" + keyword + "\" is " +
                                 std::to_string(passage.size()) + " chars, minimum " +
                                 std::to_string(config_.min_passage_chars));
    }
    return passage;
}

bool TwohopGenerator::accordant(const std::string& recheck, const std::string& expected) const {
    if (config_.accordance == AccordanceMode::Exact) {
        return normalize_answer(recheck) == normalize_answer(expected);
    }
    return token_f1(recheck, expected) >= config_.accordance_f1_threshold;
}

std::optional<QAQuadruplet> TwohopGenerator::generate_hop_qa(
    const std::string& passage, const std::string& keyword, const EntityMention& candidate,
    HopPosition hop, const std::optional<std::string>& prior_answer,
    const std::optional<std::string>& avoid_entity) {
    if (hop == HopPosition::Second && !prior_answer) {
        throw std::invalid_argument("second hop requires the first-hop answer");
    }
    if (equals_normalized(candidate.surface, keyword)) return std::nullopt;

    std::string question;
    if (hop == HopPosition::First) {
        question = clean_question(gateway_->complete(
            TaskKind::QuestionGeneration,
            prompts::first_hop_question(keyword, passage, candidate.surface)));
    } else {
        question = clean_question(gateway_->complete(
            TaskKind::QuestionGeneration,
            prompts::second_hop_question(keyword, passage, candidate.surface,
                                         avoid_entity.value_or(""))));
    }
    if (question.empty()) return std::nullopt;
    if (hop == HopPosition::Second) {
        if (!contains_normalized(question, *prior_answer)) return std::nullopt;
        if (avoid_entity && contains_normalized(question, *avoid_entity)) return std::nullopt;
    }

    std::string recheck = trim(
        gateway_->complete(TaskKind::AnswerExtraction,
                           prompts::extract_answer(keyword, passage, question)));
    if (!accordant(recheck, candidate.surface)) return std::nullopt;

    std::string explanation = trim(gateway_->complete(
        TaskKind::ExplanationGeneration,
        prompts::explanation(keyword, passage, question, candidate.surface)));
    if (!contains_normalized(explanation, candidate.surface)) return std::nullopt;

    QAQuadruplet quad;
    quad.keyword = keyword;
    quad.passage = passage;
    quad.question = question;
    quad.answer = candidate.surface;
    quad.answer_label = candidate.label;
    quad.explanation = explanation;
    quad.hop_id = hop_ids_.next();
    return quad;
}

std::vector<TwoHopPair> TwohopGenerator::run_stage1(const std::vector<TopicSeed>& topics,
                                                    const GenerationBudget& budget) {
    auto note = [&](const std::string& msg) {
        if (log_skip_) log_skip_(msg);
    };

    std::vector<TwoHopPair> pairs;
    for (const auto& topic : topics) {
        if (static_cast<int>(pairs.size()) >= budget.max_pairs) break;
        std::vector<std::string> keywords;
        try {
            keywords = name_keywords(topic);
        } catch (const ParseError& e) {
            note(std::string("topic skipped: ") + e.what());
            continue;
        }
        for (const auto& keyword : keywords) {
            if (static_cast<int>(pairs.size()) >= budget.max_pairs) break;
            std::string passage;
            try {
                passage = generate_passage(keyword);
            } catch (const GenerationTooShort& e) {
                note(std::string("keyword skipped: ") + e.what());
                continue;
            }
            auto candidates =
                extractor_->extract_candidates(passage, {normalized_text(keyword)});
            if (static_cast<int>(candidates.size()) > budget.max_candidates_per_passage) {
                candidates.resize(static_cast<size_t>(budget.max_candidates_per_passage));
            }
            for (const auto& candidate : candidates) {
                if (static_cast<int>(pairs.size()) >= budget.max_pairs) break;
                auto first = generate_hop_qa(passage, keyword, candidate, HopPosition::First,
                                             std::nullopt, std::nullopt);
                if (!first) {
                    note("first-hop gate failed for candidate \"" + candidate.surface + "\"");
                    continue;
                }
                if (is_keyword_infeasible(first->answer_label)) {
                    note("first-hop answer \"" + first->answer +
                         "\" has keyword-infeasible label " + to_string(first->answer_label));
                    continue;
                }

                const std::string& second_keyword = first->answer;
                std::string second_passage;
                try {
                    second_passage = generate_passage(second_keyword);
                } catch (const GenerationTooShort& e) {
                    note(std::string("second passage skipped: ") + e.what());
                    continue;
                }
                auto second_candidates = extractor_->extract_candidates(
                    second_passage,
                    {normalized_text(keyword), normalized_text(first->answer)});
                if (static_cast<int>(second_candidates.size()) >
                    budget.max_candidates_per_passage) {
                    second_candidates.resize(
                        static_cast<size_t>(budget.max_candidates_per_passage));
                }
                for (const auto& second_candidate : second_candidates) {
                    if (static_cast<int>(pairs.size()) >= budget.max_pairs) break;
                    auto second =
                        generate_hop_qa(second_passage, second_keyword, second_candidate,
                                        HopPosition::Second, first->answer, keyword);
                    if (!second) {
                        note("second-hop gate failed for candidate \"" +
                             second_candidate.surface + "\"");
                        continue;
                    }
                    TwoHopPair pair{*first, *second};
                    auto violations = pair_violations(pair);
                    if (!violations.empty()) {
                        throw InternalError("emitted pair violates invariants: " + violations[0]);
                    }
                    pairs.push_back(std::move(pair));
                }
            }
        }
    }
    return pairs;
}

}  // namespace spcot
