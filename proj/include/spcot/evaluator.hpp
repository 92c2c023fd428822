#pragma once

#include <string>
#include <vector>

namespace spcot {

// Standard QA answer normalization: lowercase, strip punctuation, drop the
// articles "a"/"an"/"the", collapse whitespace.
std::string normalize_answer(const std::string& text);

// Multi-answer gold expansion: parenthesized spans are deleted, the string
// is split on the configured delimiters, and the unsplit (paren-stripped)
// form is always kept so splitting can never lower a score.
const std::vector<std::string>& default_gold_delimiters();  // "," ";" "/" " and "
std::vector<std::string> expand_gold(const std::string& answer,
                                     const std::vector<std::string>& delimiters =
                                         default_gold_delimiters());

// Token-level F1 of two already-raw strings (normalization applied inside).
double token_f1(const std::string& a, const std::string& b);

int em_score(const std::string& pred, const std::vector<std::string>& golds);
double f1_score(const std::string& pred, const std::vector<std::string>& golds);

struct ExampleScore {
    std::string id;
    int em = 0;
    double f1 = 0.0;
};

struct EvalReport {
    std::vector<ExampleScore> per_example;
    double aggregate_em = 0.0;  // percentages
    double aggregate_f1 = 0.0;
    size_t n = 0;
};

struct Prediction {
    std::string id;
    std::string answer;
};

struct GoldExample {
    std::string id;
    std::string question;
    std::vector<std::string> answers;
};

// Scores every gold example; a gold id without a prediction scores zero, a
// prediction id missing from the golds raises UnknownId.
EvalReport evaluate(const std::vector<Prediction>& preds, const std::vector<GoldExample>& golds,
                    const std::vector<std::string>& delimiters = default_gold_delimiters());

}  // namespace spcot
