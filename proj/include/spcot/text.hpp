#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spcot {

// Canonical form used by every substring/equality constraint in the
// pipeline: lowercased (ASCII), trimmed, internal whitespace runs
// collapsed to single spaces.
std::string normalized_text(std::string_view text);

// True iff normalized_text(needle) occurs inside normalized_text(haystack).
// An empty needle never matches.
bool contains_normalized(std::string_view haystack, std::string_view needle);

bool equals_normalized(std::string_view a, std::string_view b);

// Raw-text span [begin, end) whose normalized form equals the normalized
// needle. Matching tolerates case differences and whitespace runs so the
// span can be spliced out of the original text.
struct RawSpan {
    size_t begin = 0;
    size_t end = 0;
};
std::optional<RawSpan> find_normalized(std::string_view haystack, std::string_view needle,
                                       size_t from = 0);

// Replaces every normalized occurrence of `needle` in `text` with
// `replacement`. Returns the number of replacements made.
size_t replace_normalized(std::string& text, std::string_view needle, std::string_view replacement);

std::string trim(std::string_view text);
std::string lowercase_ascii(std::string_view text);
std::vector<std::string> whitespace_tokens(std::string_view text);

// FNV-1a, used for fixture keys and config hashes.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace spcot
