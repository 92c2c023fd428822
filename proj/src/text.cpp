#include "spcot/text.hpp"

#include <cctype>

namespace spcot {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

char to_lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

std::string normalized_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(to_lower(c));
    }
    return out;
}

bool contains_normalized(std::string_view haystack, std::string_view needle) {
    std::string n = normalized_text(needle);
    if (n.empty()) return false;
    return normalized_text(haystack).find(n) != std::string::npos;
}

bool equals_normalized(std::string_view a, std::string_view b) {
    return normalized_text(a) == normalized_text(b);
}

std::optional<RawSpan> find_normalized(std::string_view haystack, std::string_view needle,
                                       size_t from) {
    std::string n = normalized_text(needle);
    if (n.empty()) return std::nullopt;
    for (size_t start = from; start < haystack.size(); ++start) {
        if (to_lower(haystack[start]) != n[0]) continue;
        size_t i = start;
        size_t k = 0;
        bool ok = true;
        while (k < n.size()) {
            if (n[k] == ' ') {
                if (i >= haystack.size() || !is_space(haystack[i])) {
                    ok = false;
                    break;
                }
                while (i < haystack.size() && is_space(haystack[i])) ++i;
                ++k;
                continue;
            }
            if (i >= haystack.size() || to_lower(haystack[i]) != n[k]) {
                ok = false;
                break;
            }
            ++i;
            ++k;
        }
        if (ok) return RawSpan{start, i};
    }
    return std::nullopt;
}

size_t replace_normalized(std::string& text, std::string_view needle, std::string_view replacement) {
    size_t count = 0;
    size_t from = 0;
    while (true) {
        auto span = find_normalized(text, needle, from);
        if (!span) break;
        text.replace(span->begin, span->end - span->begin, replacement);
        from = span->begin + replacement.size();
        ++count;
    }
    return count;
}

std::string trim(std::string_view text) {
    size_t b = 0;
    size_t e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    return std::string(text.substr(b, e - b));
}

std::string lowercase_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = to_lower(c);
    return out;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (is_space(c)) {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace spcot
