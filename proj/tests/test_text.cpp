#include <doctest.h>

#include <random>

#include "spcot/text.hpp"

using namespace spcot;

TEST_SUITE("text") {

TEST_CASE("normalized_text basics") {
    CHECK(normalized_text("Elon  Musk ") == "elon musk");
    CHECK(normalized_text("") == "");
    CHECK(normalized_text("SpaceX") == "spacex");
    CHECK(normalized_text("  a\t\nb  ") == "a b");
    CHECK(normalized_text("ALL CAPS") == "all caps");
}

TEST_CASE("contains_normalized ignores case and whitespace runs") {
    CHECK(contains_normalized("Where was Elon  Musk born?", "elon musk"));
    CHECK(contains_normalized("the quick brown fox", "QUICK  BROWN"));
    CHECK_FALSE(contains_normalized("Where was Musk born?", "Elon Musk"));
    CHECK_FALSE(contains_normalized("anything", ""));
    CHECK_FALSE(contains_normalized("", "x"));
}

TEST_CASE("find_normalized returns raw spans") {
    std::string text = "Where was Elon  MUSK born?";
    auto span = find_normalized(text, "elon musk");
    REQUIRE(span.has_value());
    CHECK(text.substr(span->begin, span->end - span->begin) == "Elon  MUSK");
}

TEST_CASE("replace_normalized replaces all occurrences") {
    std::string text = "Elon Musk met ELON  MUSK.";
    CHECK(replace_normalized(text, "elon musk", "[Q]") == 2);
    CHECK(text == "[Q] met [Q].");

    std::string none = "nothing here";
    CHECK(replace_normalized(none, "absent", "x") == 0);
    CHECK(none == "nothing here");
}

TEST_CASE("containment is invariant under casing changes") {
    std::mt19937 rng(11);
    const std::string hay = "The Orion Medal was awarded in Marlowe City";
    const std::string needle = "orion medal";
    for (int trial = 0; trial < 50; ++trial) {
        std::string mutated = hay;
        for (char& c : mutated) {
            if (std::isalpha(static_cast<unsigned char>(c)) && rng() % 2) {
                c = static_cast<char>(rng() % 2 ? std::toupper(static_cast<unsigned char>(c))
                                                : std::tolower(static_cast<unsigned char>(c)));
            }
        }
        CHECK(contains_normalized(mutated, needle));
    }
}

TEST_CASE("whitespace_tokens") {
    CHECK(whitespace_tokens("a b  c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(whitespace_tokens("   ") == std::vector<std::string>{});
}

TEST_CASE("fnv1a64 is stable") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == fnv1a64("a"));
    CHECK(fnv1a64("a") != fnv1a64("b"));
    CHECK(hex64(0).size() == 16);
}

}  // TEST_SUITE
