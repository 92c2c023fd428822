#pragma once

#include <string>
#include <vector>

#include "spcot/types.hpp"

namespace spcot {
namespace prompts {

// Stage 1: two-hop QA generation.
std::string name_keywords(int count, const std::string& topic);
std::string generate_passage(const std::string& keyword);
std::string first_hop_question(const std::string& keyword, const std::string& passage,
                               const std::string& answer);
std::string second_hop_question(const std::string& keyword, const std::string& passage,
                                const std::string& answer, const std::string& avoid);
std::string extract_answer(const std::string& keyword, const std::string& passage,
                           const std::string& question);
std::string explanation(const std::string& keyword, const std::string& passage,
                        const std::string& question, const std::string& answer);

// Stage 2: reform prompts. The core templates are rendered verbatim; the
// pipeline prepends the shipped in-context demonstrations.
std::string binary_reform(const std::string& question, const std::string& answer, bool positive);
std::string naturalize(const std::string& raw_question);
std::string binary_reform_with_demos(const std::string& question, const std::string& answer,
                                     bool positive);
std::string naturalize_with_demos(const std::string& raw_question);

// Stage 3 / inference.
extern const char* const kStepPrefix;      // "Step "
extern const char* const kAnswerSentence;  // "Therefore, the answer in just one entity is: "
extern const char* const kThinkStepByStep; // "Answer: Let's think step by step:"

// Full reasoning block for one demonstration (question + CoT).
std::string cot_block(const std::string& question, const std::string& cot_text);
std::string zero_shot(const std::string& question);
std::string few_shot(const std::vector<Demonstration>& demos, const std::string& question);

// The four manually designed in-context demonstrations shipped with the
// reform prompts (artifact data, not model output).
struct ReformDemo {
    std::string question;
    std::string answer;
    std::string reformed;
};
const std::vector<ReformDemo>& binary_demos_positive();
const std::vector<ReformDemo>& binary_demos_negative();

struct NaturalizeDemo {
    std::string raw;
    std::string natural;
};
const std::vector<NaturalizeDemo>& naturalize_demos();

}  // namespace prompts
}  // namespace spcot
