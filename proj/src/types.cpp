#include "spcot/types.hpp"

#include <array>
#include <cstdio>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

namespace {

struct LabelName {
    EntityLabel label;
    const char* name;
};

constexpr std::array<LabelName, 19> kLabelNames = {{
    {EntityLabel::Person, "PERSON"},
    {EntityLabel::Org, "ORG"},
    {EntityLabel::Gpe, "GPE"},
    {EntityLabel::Loc, "LOC"},
    {EntityLabel::Event, "EVENT"},
    {EntityLabel::Work, "WORK"},
    {EntityLabel::Norp, "NORP"},
    {EntityLabel::Fac, "FAC"},
    {EntityLabel::Product, "PRODUCT"},
    {EntityLabel::Language, "LANGUAGE"},
    {EntityLabel::Law, "LAW"},
    {EntityLabel::Quantity, "QUANTITY"},
    {EntityLabel::Ordinal, "ORDINAL"},
    {EntityLabel::Cardinal, "CARDINAL"},
    {EntityLabel::Percent, "PERCENT"},
    {EntityLabel::Money, "MONEY"},
    {EntityLabel::Date, "DATE"},
    {EntityLabel::Time, "TIME"},
    {EntityLabel::Other, "OTHER"},
}};

}  // namespace

std::string to_string(EntityLabel label) {
    for (const auto& entry : kLabelNames) {
        if (entry.label == label) return entry.name;
    }
    return "OTHER";
}

EntityLabel entity_label_from_string(const std::string& name) {
    for (const auto& entry : kLabelNames) {
        if (name == entry.name) return entry.label;
    }
    return EntityLabel::Other;
}

bool is_keyword_infeasible(EntityLabel label) {
    switch (label) {
        case EntityLabel::Quantity:
        case EntityLabel::Ordinal:
        case EntityLabel::Cardinal:
        case EntityLabel::Percent:
        case EntityLabel::Money:
        case EntityLabel::Date:
        case EntityLabel::Time:
            return true;
        default:
            return false;
    }
}

std::vector<std::string> quadruplet_violations(const QAQuadruplet& quad) {
    std::vector<std::string> out;
    if (trim(quad.question).empty()) out.push_back("question is empty");
    if (trim(quad.answer).empty()) out.push_back("answer is empty");
    if (trim(quad.passage).empty()) out.push_back("passage is empty");
    if (trim(quad.explanation).empty()) out.push_back("explanation is empty");
    if (!quad.answer.empty() && !contains_normalized(quad.explanation, quad.answer)) {
        out.push_back("explanation does not contain the answer");
    }
    if (equals_normalized(quad.answer, quad.keyword)) {
        out.push_back("answer equals the keyword");
    }
    return out;
}

std::vector<std::string> pair_violations(const TwoHopPair& pair) {
    std::vector<std::string> out;
    for (const auto& reason : quadruplet_violations(pair.first)) {
        out.push_back("first hop: " + reason);
    }
    for (const auto& reason : quadruplet_violations(pair.second)) {
        out.push_back("second hop: " + reason);
    }
    if (!contains_normalized(pair.second.question, pair.first.answer)) {
        out.push_back("second-hop question does not mention the first-hop answer");
    }
    if (equals_normalized(pair.second.answer, pair.first.keyword)) {
        out.push_back("second-hop answer equals the first-hop keyword");
    }
    if (equals_normalized(pair.second.answer, pair.first.answer)) {
        out.push_back("second-hop answer equals the first-hop answer");
    }
    return out;
}

ReasoningChain make_chain(std::string graph_type, std::vector<QAQuadruplet> hops) {
    if (hops.empty()) throw InternalError("reasoning chain needs at least one hop");
    ReasoningChain chain;
    chain.graph_type = std::move(graph_type);
    chain.final_answer = hops.back().answer;
    chain.hops = std::move(hops);
    return chain;
}

std::string IdAllocator::next() {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%c%06lu", prefix_, ++counter_);
    return buf;
}

}  // namespace spcot
