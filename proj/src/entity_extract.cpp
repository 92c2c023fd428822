#include "spcot/entity_extract.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string text;
    size_t begin = 0;
    size_t end = 0;
    bool sentence_start = false;
};

bool all_of_token(const std::string& t, bool (*pred)(char)) {
    if (t.empty()) return false;
    for (char c : t) {
        if (!pred(c)) return false;
    }
    return true;
}

// Words never treated as single-token entities even when capitalized at a
// sentence start.
const std::unordered_set<std::string>& common_words() {
    static const std::unordered_set<std::string> words = {
        "the",     "a",        "an",      "in",      "on",      "at",       "to",
        "from",    "of",       "with",    "by",      "for",     "and",      "or",
        "but",     "as",       "it",      "its",     "he",      "she",      "his",
        "her",     "they",     "their",   "them",    "we",      "our",      "us",
        "you",     "your",     "i",       "this",    "that",    "these",    "those",
        "there",   "here",     "when",    "where",   "who",     "whom",     "whose",
        "what",    "which",    "why",     "how",     "is",      "are",      "was",
        "were",    "be",       "been",    "being",   "have",    "has",      "had",
        "do",      "does",     "did",     "will",    "would",   "can",      "could",
        "may",     "might",    "must",    "shall",   "should",  "not",      "no",
        "yes",     "however",  "moreover", "although", "though", "while",   "during",
        "after",   "before",   "since",   "until",   "because", "if",       "then",
        "than",    "also",     "both",    "each",    "few",     "more",     "most",
        "other",   "some",     "such",    "only",    "own",     "same",     "so",
        "too",     "very",     "just",    "now",     "today",   "among",    "between",
        "across",  "around",   "beyond",  "despite", "under",   "over",     "about",
        "against", "along",    "through", "within",  "without", "toward",   "towards",
        "upon",    "once",     "many",    "several", "one",     "two",      "three",
        "new",     "early",    "later",   "per",     "via",     "like",     "near",
        "meanwhile", "furthermore", "still", "yet",   "thus",    "hence",    "instead",
    };
    return words;
}

// Lowercase connectors allowed inside a capitalized span when another
// capitalized token follows ("United States of America").
const std::unordered_set<std::string>& span_connectors() {
    static const std::unordered_set<std::string> words = {"of",  "the", "and", "de",
                                                          "la",  "von", "van", "der",
                                                          "del", "di",  "da",  "al"};
    return words;
}

const std::unordered_set<std::string>& org_suffixes() {
    static const std::unordered_set<std::string> words = {
        "inc",     "corp",   "ltd",        "llc",          "company",    "corporation",
        "motors",  "energy", "industries", "university",   "college",    "institute",
        "association", "organization", "organisation", "agency", "bank", "group",
        "team",    "club",   "committee",  "council",      "ministry",   "department",
        "airlines", "systems", "labs",     "laboratories", "foundation", "studios",
    };
    return words;
}

const std::unordered_set<std::string>& fac_suffixes() {
    static const std::unordered_set<std::string> words = {
        "tower",   "bridge", "stadium",  "airport", "museum",  "palace", "castle",
        "cathedral", "temple", "dome",   "hall",    "station", "library", "observatory",
        "spire",
    };
    return words;
}

const std::unordered_set<std::string>& gpe_suffixes() {
    static const std::unordered_set<std::string> words = {"city", "town", "village",
                                                          "county", "province", "republic",
                                                          "kingdom", "state"};
    return words;
}

const std::unordered_set<std::string>& loc_suffixes() {
    static const std::unordered_set<std::string> words = {
        "island", "islands", "river",  "lake",   "bay",    "sea",     "ocean",
        "mountain", "mountains", "valley", "desert", "forest", "park", "beach",
        "coast",  "harbor",  "harbour", "peninsula", "strait", "falls", "canyon",
    };
    return words;
}

const std::unordered_set<std::string>& event_suffixes() {
    static const std::unordered_set<std::string> words = {
        "war",   "battle", "revolution", "olympics", "cup", "championship",
        "festival", "conference", "summit", "games",
    };
    return words;
}

const std::unordered_set<std::string>& work_suffixes() {
    static const std::unordered_set<std::string> words = {"medal", "prize", "award", "trophy"};
    return words;
}

const std::unordered_set<std::string>& person_titles() {
    static const std::unordered_set<std::string> words = {
        "mr",   "mrs",  "ms",        "dr",      "sir",    "president", "professor",
        "captain", "general", "senator", "judge", "king",  "queen",     "prince",
        "princess", "lord", "lady",
    };
    return words;
}

const std::unordered_set<std::string>& month_names() {
    static const std::unordered_set<std::string> words = {
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december",
    };
    return words;
}

const std::unordered_set<std::string>& quantity_units() {
    static const std::unordered_set<std::string> words = {
        "km",   "kilometers", "kilometres", "miles", "kg",     "kilograms", "grams",
        "tons", "tonnes",     "feet",       "meters", "metres", "acres",    "litres",
        "liters", "hectares",
    };
    return words;
}

std::string strip_word(const std::string& token) {
    std::string word = lowercase_ascii(token);
    while (!word.empty() && !is_alpha(word.back()) && !is_digit(word.back())) word.pop_back();
    return word;
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    bool at_sentence_start = true;
    size_t i = 0;
    auto is_token_char = [](char c) {
        return is_alpha(c) || is_digit(c) || c == '\'' || c == '-' || c == '.' || c == ',' ||
               c == '%' || c == '$' || c == '&' || c == ':' || c == '/';
    };
    while (i < text.size()) {
        char c = text[i];
        if (!is_token_char(c)) {
            ++i;
            continue;
        }
        size_t begin = i;
        while (i < text.size() && is_token_char(text[i])) ++i;
        size_t end = i;
        // Trailing sentence punctuation belongs to the sentence, not the
        // token, unless the token is a dotted abbreviation ("U.S.").
        bool sentence_end = false;
        while (end > begin) {
            char last = text[end - 1];
            if (last != '.' && last != ',' && last != ':' && last != '\'') break;
            if (last == '.') {
                size_t letters = 0;
                bool dotted = true;
                for (size_t k = begin; k < end; ++k) {
                    if (is_alpha(text[k])) {
                        ++letters;
                        if (k + 1 >= end || text[k + 1] != '.') {
                            dotted = false;
                            break;
                        }
                        ++k;
                    } else {
                        dotted = false;
                        break;
                    }
                }
                if (dotted && letters > 0) break;
                sentence_end = true;
            }
            --end;
        }
        if (end == begin) {
            if (sentence_end) at_sentence_start = true;
            continue;
        }
        Token token;
        token.text = text.substr(begin, end - begin);
        token.begin = begin;
        token.end = end;
        token.sentence_start = at_sentence_start;
        tokens.push_back(token);
        at_sentence_start = sentence_end;
        if (!sentence_end && end < text.size()) {
            char after = text[end];
            if (after == '.' || after == '!' || after == '?') at_sentence_start = true;
        }
    }
    return tokens;
}

bool capitalized(const std::string& token) {
    return !token.empty() && is_upper(token[0]);
}

bool has_internal_upper(const std::string& token) {
    for (size_t i = 1; i < token.size(); ++i) {
        if (is_upper(token[i])) return true;
    }
    return false;
}

bool all_caps_acronym(const std::string& token) {
    if (token.size() < 2) return false;
    for (char c : token) {
        if (!is_upper(c) && c != '.' && c != '&') return false;
    }
    return true;
}

bool is_year(const std::string& token) {
    if (token.size() != 4 || !all_of_token(token, is_digit)) return false;
    return token[0] == '1' || token[0] == '2';
}

bool is_integerish(const std::string& token) {
    if (token.empty()) return false;
    size_t digits = 0;
    for (size_t i = 0; i < token.size(); ++i) {
        char c = token[i];
        if (is_digit(c)) {
            ++digits;
        } else if (c == ',' || c == '.') {
            if (i == 0 || i + 1 == token.size()) return false;
        } else {
            return false;
        }
    }
    return digits > 0;
}

struct NumericMatch {
    EntityLabel label;
    size_t token_count = 1;
};

std::optional<NumericMatch> match_numeric(const std::vector<Token>& tokens, size_t at) {
    const std::string& t = tokens[at].text;
    std::string lower = lowercase_ascii(t);
    auto next_word = [&](size_t offset) -> std::string {
        return at + offset < tokens.size() ? strip_word(tokens[at + offset].text) : std::string();
    };

    if (!t.empty() && t.back() == '%' && is_integerish(t.substr(0, t.size() - 1))) {
        return NumericMatch{EntityLabel::Percent, 1};
    }
    if (is_integerish(t) && next_word(1) == "percent") {
        return NumericMatch{EntityLabel::Percent, 2};
    }
    if (t.size() > 1 && t[0] == '$' && is_integerish(t.substr(1))) {
        return NumericMatch{EntityLabel::Money, 1};
    }
    if (is_integerish(t)) {
        std::string unit = next_word(1);
        if (unit == "dollars" || unit == "euros") return NumericMatch{EntityLabel::Money, 2};
        if (quantity_units().count(unit)) return NumericMatch{EntityLabel::Quantity, 2};
    }
    {
        size_t colon = t.find(':');
        if (colon != std::string::npos && colon > 0 && colon + 1 < t.size() &&
            all_of_token(t.substr(0, colon), is_digit) &&
            all_of_token(t.substr(colon + 1), is_digit)) {
            std::string ampm = next_word(1);
            return NumericMatch{EntityLabel::Time, (ampm == "am" || ampm == "pm") ? 2u : 1u};
        }
    }
    // Date forms: years, decades, month [day][, year], day month year, d/m/y.
    if (is_year(t)) return NumericMatch{EntityLabel::Date, 1};
    if (t.size() == 5 && t.back() == 's' && is_year(t.substr(0, 4))) {
        return NumericMatch{EntityLabel::Date, 1};
    }
    if (month_names().count(lower)) {
        size_t used = 1;
        if (at + 1 < tokens.size() && is_integerish(tokens[at + 1].text)) {
            used = 2;
            if (at + 2 < tokens.size() && is_year(tokens[at + 2].text)) used = 3;
        }
        return NumericMatch{EntityLabel::Date, used};
    }
    if (is_integerish(t) && t.size() <= 2 && month_names().count(next_word(1))) {
        size_t used = 2;
        if (at + 2 < tokens.size() && is_year(tokens[at + 2].text)) used = 3;
        return NumericMatch{EntityLabel::Date, used};
    }
    {
        size_t first = t.find('/');
        if (first != std::string::npos) {
            size_t second = t.find('/', first + 1);
            if (second != std::string::npos && all_of_token(t.substr(0, first), is_digit) &&
                all_of_token(t.substr(first + 1, second - first - 1), is_digit) &&
                all_of_token(t.substr(second + 1), is_digit)) {
                return NumericMatch{EntityLabel::Date, 1};
            }
        }
    }
    if (t.size() >= 3 && is_integerish(t.substr(0, t.size() - 2))) {
        std::string suffix = lower.substr(lower.size() - 2);
        if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th") {
            return NumericMatch{EntityLabel::Ordinal, 1};
        }
    }
    if (is_integerish(t)) return NumericMatch{EntityLabel::Cardinal, 1};
    return std::nullopt;
}

EntityLabel classify_span(const std::vector<Token>& tokens, size_t first, size_t last,
                          const std::vector<Token>& all, size_t span_start_index) {
    std::string last_word = strip_word(tokens[last].text);
    for (size_t i = first; i <= last; ++i) {
        if (all_caps_acronym(tokens[i].text) || has_internal_upper(tokens[i].text)) {
            return EntityLabel::Org;
        }
    }
    if (org_suffixes().count(last_word)) return EntityLabel::Org;
    if (fac_suffixes().count(last_word)) return EntityLabel::Fac;
    if (gpe_suffixes().count(last_word)) return EntityLabel::Gpe;
    if (loc_suffixes().count(last_word)) return EntityLabel::Loc;
    if (event_suffixes().count(last_word)) return EntityLabel::Event;
    if (work_suffixes().count(last_word)) return EntityLabel::Work;

    std::string prev;
    if (span_start_index > 0) prev = strip_word(all[span_start_index - 1].text);
    if (person_titles().count(prev)) return EntityLabel::Person;

    size_t words = last - first + 1;
    if (words >= 2) return EntityLabel::Person;
    if (prev == "in" || prev == "at" || prev == "from" || prev == "near" || prev == "to") {
        return EntityLabel::Gpe;
    }
    return EntityLabel::Other;
}

}  // namespace

std::vector<EntityMention> HeuristicExtractor::raw_mentions(const std::string& passage) const {
    std::vector<Token> tokens = tokenize(passage);
    std::vector<EntityMention> mentions;

    size_t i = 0;
    while (i < tokens.size()) {
        if (auto numeric = match_numeric(tokens, i)) {
            EntityMention m;
            m.begin = tokens[i].begin;
            m.end = tokens[i + numeric->token_count - 1].end;
            m.surface = passage.substr(m.begin, m.end - m.begin);
            m.label = numeric->label;
            mentions.push_back(std::move(m));
            i += numeric->token_count;
            continue;
        }
        if (capitalized(tokens[i].text)) {
            std::string word = strip_word(tokens[i].text);
            bool skip = tokens[i].sentence_start && common_words().count(word) &&
                        !(i + 1 < tokens.size() && capitalized(tokens[i + 1].text));
            bool common_single = common_words().count(word) &&
                                 !(i + 1 < tokens.size() && capitalized(tokens[i + 1].text));
            if (skip || common_single) {
                ++i;
                continue;
            }
            size_t first = i;
            // Leading capitalized stopword ("The Hague" keeps it, plain "The
            // company" drops it): drop when the remainder still starts a span.
            if (common_words().count(word) && i + 1 < tokens.size() &&
                capitalized(tokens[i + 1].text)) {
                ++first;
            }
            size_t last = first;
            size_t j = first + 1;
            while (j < tokens.size()) {
                if (capitalized(tokens[j].text) && !tokens[j].sentence_start &&
                    !match_numeric(tokens, j)) {
                    last = j;
                    ++j;
                    continue;
                }
                std::string lower = strip_word(tokens[j].text);
                if (span_connectors().count(lower) && j + 1 < tokens.size() &&
                    capitalized(tokens[j + 1].text) && !tokens[j + 1].sentence_start) {
                    j += 1;
                    continue;
                }
                break;
            }
            // A single token that is itself a common word is not an entity.
            std::string first_word = strip_word(tokens[first].text);
            if (first == last && common_words().count(first_word)) {
                i = last + 1;
                continue;
            }
            EntityMention m;
            m.begin = tokens[first].begin;
            m.end = tokens[last].end;
            m.surface = passage.substr(m.begin, m.end - m.begin);
            m.label = classify_span(tokens, first, last, tokens, first);
            mentions.push_back(std::move(m));
            i = last + 1;
            continue;
        }
        ++i;
    }
    return mentions;
}

std::vector<EntityMention> LlmExtractor::raw_mentions(const std::string& passage) const {
    std::string prompt =
        "Passage:\n" + passage +
        "\n\nList the named entities in the passage, one per line, in the format: entity | label. "
        "Use labels from: PERSON, ORG, GPE, LOC, EVENT, WORK, NORP, FAC, PRODUCT, LANGUAGE, LAW, "
        "QUANTITY, ORDINAL, CARDINAL, PERCENT, MONEY, DATE, TIME.";
    std::string response = gateway_->complete(TaskKind::AnswerExtraction, prompt);

    std::vector<EntityMention> mentions;
    std::istringstream lines(response);
    std::string line;
    while (std::getline(lines, line)) {
        auto sep = line.find('|');
        if (sep == std::string::npos) continue;
        std::string surface = trim(line.substr(0, sep));
        std::string label = trim(line.substr(sep + 1));
        if (surface.empty()) continue;
        auto span = find_normalized(passage, surface);
        if (!span) continue;
        EntityMention m;
        m.begin = span->begin;
        m.end = span->end;
        m.surface = passage.substr(m.begin, m.end - m.begin);
        m.label = entity_label_from_string(label);
        mentions.push_back(std::move(m));
    }
    return mentions;
}

std::vector<EntityMention> Extractor::extract_candidates(const std::string& passage,
                                                         const std::set<std::string>& block) const {
    if (passage.empty()) throw std::invalid_argument("passage must be non-empty");
    std::set<std::string> blocked;
    for (const auto& item : block) blocked.insert(normalized_text(item));

    std::vector<EntityMention> out;
    std::unordered_set<std::string> seen;
    for (auto& mention : raw_mentions(passage)) {
        std::string key = normalized_text(mention.surface);
        if (key.empty() || blocked.count(key) || seen.count(key)) continue;
        seen.insert(key);
        out.push_back(mention);
    }
    return out;
}

std::vector<EntityMention> filter_keyword_feasible(const std::vector<EntityMention>& mentions) {
    std::vector<EntityMention> out;
    for (const auto& mention : mentions) {
        if (!is_keyword_infeasible(mention.label)) out.push_back(mention);
    }
    return out;
}

std::unique_ptr<Extractor> make_extractor(const std::string& kind,
                                          std::shared_ptr<LlmGateway> gateway) {
    if (kind == "heuristic" || kind.empty()) return std::make_unique<HeuristicExtractor>();
    if (kind == "llm") {
        if (!gateway) throw ConfigError("llm extractor needs a configured gateway");
        return std::make_unique<LlmExtractor>(std::move(gateway));
    }
    throw ConfigError("unknown extractor kind: " + kind);
}

}  // namespace spcot
