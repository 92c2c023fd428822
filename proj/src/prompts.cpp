#include "spcot/prompts.hpp"

namespace spcot {
namespace prompts {

const char* const kStepPrefix = "Step ";
const char* const kAnswerSentence = "Therefore, the answer in just one entity is: ";
const char* const kThinkStepByStep = "Answer: Let's think step by step:";

std::string name_keywords(int count, const std::string& topic) {
    return "Name " + std::to_string(count) + " " + topic + ":";
}

std::string generate_passage(const std::string& keyword) {
    return "Generate a Wikipedia passage about " + keyword + ".";
}

std::string first_hop_question(const std::string& keyword, const std::string& passage,
                               const std::string& answer) {
    return "Passage about " + keyword + ":\n" + passage +
           "\n\nGenerate a question to which the answer is the entity " + answer + ".";
}

std::string second_hop_question(const std::string& keyword, const std::string& passage,
                                const std::string& answer, const std::string& avoid) {
    return "Passage about " + keyword + ":\n" + passage +
           "\n\nGenerate a question that meets the following conditions: 1. contains the term '" +
           keyword + "' in question, 2. the answer is " + answer +
           ", 3. Avoid the following entities in the question: " + avoid;
}

std::string extract_answer(const std::string& keyword, const std::string& passage,
                           const std::string& question) {
    return "Passage about " + keyword + ":\n" + passage + "\n\nQuestion:\n " + question +
           "\n\nExtract the answer directly from the passage in less words as possible.";
}

std::string explanation(const std::string& keyword, const std::string& passage,
                        const std::string& question, const std::string& answer) {
    return "Passage about " + keyword + ":\n" + passage + "\n\n Question:\n " + question +
           "\n\nAnswer:\n" + answer +
           "\n\nAccording to an evidence from the passage to support the answer, rewrite it to "
           "make its meaning clear without passage.";
}

std::string binary_reform(const std::string& question, const std::string& answer, bool positive) {
    return "Question: " + question + "\nAnswer: " + answer +
           "\nReform the question to a general interrogative question that can be answered with " +
           (positive ? "yes" : "no") + ":";
}

std::string naturalize(const std::string& raw_question) {
    return "Raw question: " + raw_question +
           "\nReplace the sentence within [] with a relative clause and make the raw question "
           "into a natural question:";
}

std::string binary_reform_with_demos(const std::string& question, const std::string& answer,
                                     bool positive) {
    const auto& demos = positive ? binary_demos_positive() : binary_demos_negative();
    std::string out;
    for (const auto& demo : demos) {
        out += binary_reform(demo.question, demo.answer, positive);
        out += "\n" + demo.reformed + "\n\n";
    }
    out += binary_reform(question, answer, positive);
    return out;
}

std::string naturalize_with_demos(const std::string& raw_question) {
    std::string out;
    for (const auto& demo : naturalize_demos()) {
        out += naturalize(demo.raw);
        out += "\n" + demo.natural + "\n\n";
    }
    out += naturalize(raw_question);
    return out;
}

std::string cot_block(const std::string& question, const std::string& cot_text) {
    return "Question: " + question + "\n" + kThinkStepByStep + "\n" + cot_text;
}

std::string zero_shot(const std::string& question) {
    return "Answer the following question with just one entity:\nQuestion: " + question +
           "\nAnswer:";
}

std::string few_shot(const std::vector<Demonstration>& demos, const std::string& question) {
    if (demos.empty()) return zero_shot(question);
    std::string out;
    for (const auto& demo : demos) {
        out += "Question: " + demo.question + "\n" + demo.cot_text + "\n\n";
    }
    out += "Question: " + question + "\n" + kThinkStepByStep + "\n";
    return out;
}

const std::vector<ReformDemo>& binary_demos_positive() {
    static const std::vector<ReformDemo> demos = {
        {"Who wrote the novel Dracula?", "Bram Stoker", "Did Bram Stoker write the novel Dracula?"},
        {"What is the capital of France?", "Paris", "Is Paris the capital of France?"},
        {"Which planet is closest to the sun?", "Mercury",
         "Is Mercury the planet closest to the sun?"},
        {"Who painted the Mona Lisa?", "Leonardo da Vinci",
         "Did Leonardo da Vinci paint the Mona Lisa?"},
    };
    return demos;
}

const std::vector<ReformDemo>& binary_demos_negative() {
    static const std::vector<ReformDemo> demos = {
        {"Who wrote the novel Dracula?", "Bram Stoker",
         "Did Charles Dickens write the novel Dracula?"},
        {"What is the capital of France?", "Paris", "Is Lyon the capital of France?"},
        {"Which planet is closest to the sun?", "Mercury",
         "Is Neptune the planet closest to the sun?"},
        {"Who painted the Mona Lisa?", "Leonardo da Vinci",
         "Did Claude Monet paint the Mona Lisa?"},
    };
    return demos;
}

const std::vector<NaturalizeDemo>& naturalize_demos() {
    static const std::vector<NaturalizeDemo> demos = {
        {"Where was [Who founded Rolls-Royce?] born?",
         "Where was the founder of Rolls-Royce born?"},
        {"What is the capital of [Which country is Mount Kilimanjaro located in?]?",
         "What is the capital of the country where Mount Kilimanjaro is located?"},
        {"When did [Who wrote Pride and Prejudice?] die?",
         "When did the author of Pride and Prejudice die?"},
        {"Which river flows through [What is the largest city of Egypt?]?",
         "Which river flows through the largest city of Egypt?"},
    };
    return demos;
}

}  // namespace prompts
}  // namespace spcot
