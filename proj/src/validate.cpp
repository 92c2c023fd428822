#include "spcot/validate.hpp"

#include <stdexcept>

#include "spcot/text.hpp"

namespace spcot {

std::string to_string(const ChainViolation& v) {
    auto hop1 = std::to_string(v.hop + 1);
    auto hop2 = std::to_string(v.other + 1);
    switch (v.kind) {
        case ViolationKind::MissingLink:
            return "missing_link(hop " + hop1 + " has no successor question)";
        case ViolationKind::Shortcut:
            return "shortcut(hop " + hop1 + " -> question " + hop2 + ")";
        case ViolationKind::FinalAnswerLeak:
            return "final_answer_leak(question " + hop2 + ")";
        case ViolationKind::Cycle:
            return "cycle(hops " + hop1 + "," + hop2 + ")";
    }
    return "unknown";
}

std::vector<ChainViolation> validate_chain(const ReasoningChain& chain) {
    const int n = static_cast<int>(chain.hops.size());
    if (n < 2 || n > 4) throw std::invalid_argument("chain must have 2-4 hops");

    std::vector<std::string> questions(static_cast<size_t>(n));
    std::vector<std::string> answers(static_cast<size_t>(n));
    std::vector<std::string> keywords(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& hop = chain.hops[static_cast<size_t>(i)];
        questions[static_cast<size_t>(i)] = normalized_text(hop.question);
        answers[static_cast<size_t>(i)] = normalized_text(hop.answer);
        keywords[static_cast<size_t>(i)] = normalized_text(hop.keyword);
    }

    auto mentioned = [&](int a, int q) {
        return !answers[static_cast<size_t>(a)].empty() &&
               questions[static_cast<size_t>(q)].find(answers[static_cast<size_t>(a)]) !=
                   std::string::npos;
    };

    std::vector<ChainViolation> out;

    // Intermediate answers: exactly one mention, in a later question.
    for (int i = 0; i < n - 1; ++i) {
        int forward = -1;
        for (int j = 0; j < n; ++j) {
            if (j == i || !mentioned(i, j)) continue;
            if (j < i) {
                out.push_back({ViolationKind::Shortcut, i, j});
            } else if (forward == -1) {
                forward = j;
            } else {
                out.push_back({ViolationKind::Shortcut, i, j});
            }
        }
        if (forward == -1) out.push_back({ViolationKind::MissingLink, i, -1});
    }

    // Final answer must stay out of every other question.
    for (int j = 0; j < n - 1; ++j) {
        if (mentioned(n - 1, j)) out.push_back({ViolationKind::FinalAnswerLeak, n - 1, j});
    }

    // Acyclicity: no entity is revisited across hops. A keyword equal to an
    // earlier answer is the composition edge itself and only allowed when
    // that answer is actually mentioned in the hop's question.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& ki = keywords[static_cast<size_t>(i)];
            const auto& kj = keywords[static_cast<size_t>(j)];
            const auto& ai = answers[static_cast<size_t>(i)];
            const auto& aj = answers[static_cast<size_t>(j)];
            bool clash = (!ki.empty() && ki == kj) || (!ai.empty() && ai == aj) ||
                         (!ki.empty() && ki == aj) ||
                         (!ai.empty() && ai == kj && !mentioned(i, j));
            if (clash) out.push_back({ViolationKind::Cycle, i, j});
        }
    }

    return out;
}

}  // namespace spcot
