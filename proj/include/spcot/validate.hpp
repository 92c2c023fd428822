#pragma once

#include <string>
#include <vector>

#include "spcot/types.hpp"

namespace spcot {

// Rules a reasoning chain must satisfy:
//   - every non-final hop's answer is mentioned in exactly one other hop's
//     question, and that hop comes later (its successor);
//   - the final answer is mentioned in no other hop's question;
//   - no two hops revisit an entity: keywords and answers are pairwise
//     distinct, except that a hop's keyword may equal a predecessor's answer
//     along a composition edge.
enum class ViolationKind {
    MissingLink,     // a non-final answer appears in no later question
    Shortcut,        // a non-final answer appears in an extra or earlier question
    FinalAnswerLeak, // the final answer appears in a non-final question
    Cycle,           // two hops share a keyword/answer outside a composition edge
};

struct ChainViolation {
    ViolationKind kind;
    // 0-based hop indices. `other` is -1 when a rule involves just one hop.
    int hop = 0;
    int other = -1;

    bool operator==(const ChainViolation& rhs) const = default;
};

std::string to_string(const ChainViolation& violation);

// Pure: same chain, same violation list. Empty result means the chain is
// valid. Requires 2-4 hops.
std::vector<ChainViolation> validate_chain(const ReasoningChain& chain);

}  // namespace spcot
