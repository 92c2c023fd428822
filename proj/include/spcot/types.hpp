#pragma once

#include <string>
#include <vector>

namespace spcot {

enum class EntityLabel {
    Person,
    Org,
    Gpe,
    Loc,
    Event,
    Work,
    Norp,
    Fac,
    Product,
    Language,
    Law,
    Quantity,
    Ordinal,
    Cardinal,
    Percent,
    Money,
    Date,
    Time,
    Other,
};

std::string to_string(EntityLabel label);
EntityLabel entity_label_from_string(const std::string& name);

// Labels that cannot seed a follow-up passage and are therefore excluded
// when a hop answer would become the next keyword.
bool is_keyword_infeasible(EntityLabel label);

// One generated reasoning hop: a passage about `keyword`, a question whose
// answer is `answer`, and a standalone explanation containing that answer.
struct QAQuadruplet {
    std::string keyword;
    std::string passage;
    std::string question;
    std::string answer;
    EntityLabel answer_label = EntityLabel::Other;
    std::string explanation;
    std::string hop_id;
};

// Empty iff the quadruplet satisfies its invariants; otherwise one
// human-readable reason per violated rule.
std::vector<std::string> quadruplet_violations(const QAQuadruplet& quad);

struct TwoHopPair {
    QAQuadruplet first;
    QAQuadruplet second;
};

std::vector<std::string> pair_violations(const TwoHopPair& pair);

// Ordered hops (topological, final-answer hop last) under one of the
// registered reasoning-graph types.
struct ReasoningChain {
    std::string graph_type;
    std::vector<QAQuadruplet> hops;
    std::string final_answer;
};

ReasoningChain make_chain(std::string graph_type, std::vector<QAQuadruplet> hops);

struct MHQAGroup {
    std::string group_id;
    std::string multihop_question;
    std::string answer;
    ReasoningChain chain;
    bool is_binary = false;
};

struct Demonstration {
    std::string question;
    std::string cot_text;
    std::string answer;
};

// Monotonic id source scoped to one run, so persisted ids are reproducible.
class IdAllocator {
public:
    explicit IdAllocator(char prefix) : prefix_(prefix) {}
    std::string next();

private:
    char prefix_;
    unsigned long counter_ = 0;
};

}  // namespace spcot
