#include "spcot/evaluator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

std::string normalize_answer(const std::string& text) {
    std::string lowered;
    lowered.reserve(text.size());
    for (char c : text) {
        if (std::ispunct(static_cast<unsigned char>(c))) continue;
        lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    std::string out;
    for (const auto& token : whitespace_tokens(lowered)) {
        if (token == "a" || token == "an" || token == "the") continue;
        if (!out.empty()) out.push_back(' ');
        out += token;
    }
    return out;
}

const std::vector<std::string>& default_gold_delimiters() {
    static const std::vector<std::string> delims = {",", ";", "/", " and "};
    return delims;
}

namespace {

std::string strip_parentheses(const std::string& text) {
    std::string out;
    int depth = 0;
    for (char c : text) {
        if (c == '(') {
            ++depth;
            continue;
        }
        if (c == ')') {
            if (depth > 0) --depth;
            continue;
        }
        if (depth == 0) out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_on_delimiters(const std::string& text,
                                             const std::vector<std::string>& delimiters) {
    std::vector<std::string> pieces;
    std::string current;
    size_t i = 0;
    while (i < text.size()) {
        bool matched = false;
        for (const auto& delim : delimiters) {
            if (!delim.empty() && text.compare(i, delim.size(), delim) == 0) {
                pieces.push_back(current);
                current.clear();
                i += delim.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            current.push_back(text[i]);
            ++i;
        }
    }
    pieces.push_back(current);
    return pieces;
}

}  // namespace

std::vector<std::string> expand_gold(const std::string& answer,
                                     const std::vector<std::string>& delimiters) {
    std::string stripped = strip_parentheses(answer);
    std::vector<std::string> candidates;
    candidates.push_back(trim(stripped));
    for (const auto& piece : split_on_delimiters(stripped, delimiters)) {
        candidates.push_back(trim(piece));
    }

    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& candidate : candidates) {
        if (candidate.empty()) continue;
        std::string key = normalize_answer(candidate);
        if (seen.count(key)) continue;
        seen.insert(key);
        out.push_back(candidate);
    }
    return out;
}

double token_f1(const std::string& a, const std::string& b) {
    auto ta = whitespace_tokens(normalize_answer(a));
    auto tb = whitespace_tokens(normalize_answer(b));
    if (ta.empty() && tb.empty()) return 1.0;
    if (ta.empty() || tb.empty()) return 0.0;

    std::unordered_map<std::string, int> counts;
    for (const auto& t : ta) ++counts[t];
    int common = 0;
    for (const auto& t : tb) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++common;
        }
    }
    if (common == 0) return 0.0;
    double precision = static_cast<double>(common) / static_cast<double>(ta.size());
    double recall = static_cast<double>(common) / static_cast<double>(tb.size());
    return 2.0 * precision * recall / (precision + recall);
}

namespace {

void require_golds(const std::vector<std::string>& golds) {
    if (golds.empty()) throw std::invalid_argument("gold answers must be non-empty");
}

}  // namespace

int em_score(const std::string& pred, const std::vector<std::string>& golds) {
    require_golds(golds);
    std::string p = normalize_answer(pred);
    for (const auto& gold : golds) {
        for (const auto& alt : expand_gold(gold)) {
            if (p == normalize_answer(alt)) return 1;
        }
    }
    return 0;
}

double f1_score(const std::string& pred, const std::vector<std::string>& golds) {
    require_golds(golds);
    double best = 0.0;
    for (const auto& gold : golds) {
        for (const auto& alt : expand_gold(gold)) {
            best = std::max(best, token_f1(pred, alt));
        }
    }
    return best;
}

EvalReport evaluate(const std::vector<Prediction>& preds, const std::vector<GoldExample>& golds,
                    const std::vector<std::string>& delimiters) {
    std::map<std::string, const GoldExample*> by_id;
    for (const auto& gold : golds) by_id[gold.id] = &gold;

    std::map<std::string, const Prediction*> pred_by_id;
    for (const auto& pred : preds) {
        if (!by_id.count(pred.id)) throw UnknownId("prediction id not in golds: " + pred.id);
        pred_by_id[pred.id] = &pred;
    }

    EvalReport report;
    double em_sum = 0.0;
    double f1_sum = 0.0;
    for (const auto& gold : golds) {
        ExampleScore score;
        score.id = gold.id;
        auto it = pred_by_id.find(gold.id);
        if (it != pred_by_id.end() && !gold.answers.empty()) {
            std::vector<std::string> expanded;
            for (const auto& answer : gold.answers) {
                for (const auto& alt : expand_gold(answer, delimiters)) expanded.push_back(alt);
            }
            if (!expanded.empty()) {
                const std::string& pred = it->second->answer;
                std::string p = normalize_answer(pred);
                for (const auto& alt : expanded) {
                    if (p == normalize_answer(alt)) score.em = 1;
                    score.f1 = std::max(score.f1, token_f1(pred, alt));
                }
            }
        }
        em_sum += score.em;
        f1_sum += score.f1;
        report.per_example.push_back(std::move(score));
    }
    report.n = golds.size();
    if (report.n > 0) {
        report.aggregate_em = 100.0 * em_sum / static_cast<double>(report.n);
        report.aggregate_f1 = 100.0 * f1_sum / static_cast<double>(report.n);
    }
    return report;
}

}  // namespace spcot
