#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "spcot/gateway.hpp"

namespace spcot {

// Deterministic provider backed by a key -> response table. Entry keys are
// either "<key>#<ordinal>" for the n-th identical request, or a bare "<key>"
// serving any ordinal. Lookup prefers the ordinal-specific entry. The table
// is immutable once serving starts; ordinal counters are atomics.
class ScriptedProvider : public ChatProvider {
public:
    ScriptedProvider() = default;

    void add(const std::string& key, const std::string& response);
    void add_prompt(const std::string& system_message, const std::string& prompt,
                    const std::string& response);
    void add_prompt_ordinal(const std::string& system_message, const std::string& prompt,
                            std::uint64_t ordinal, const std::string& response);

    // JSONL, one {"key": ..., "response": ...} object per line.
    void load_jsonl(const std::string& path);
    void save_jsonl(const std::string& path) const;

    // Rewinds the repeated-prompt counters, as if no request had been
    // served. Loading the table from disk starts rewound.
    void reset_ordinals();

    size_t size() const { return responses_.size(); }

    std::string complete(const CompletionRequest& request) override;

private:
    std::unordered_map<std::string, std::string> responses_;
    // Keyed by the bare (ordinal-free) fixture key.
    std::unordered_map<std::string, std::unique_ptr<std::atomic<std::uint64_t>>> ordinals_;
    std::vector<std::string> insertion_order_;
};

}  // namespace spcot
