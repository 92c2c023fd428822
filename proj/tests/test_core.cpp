#include <doctest.h>

#include <random>

#include "spcot/text.hpp"
#include "spcot/types.hpp"
#include "spcot/validate.hpp"
#include "test_support.hpp"

using namespace spcot;
using testsupport::chain;
using testsupport::quad;

TEST_SUITE("core") {

TEST_CASE("quadruplet invariants") {
    auto good = quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1");
    good.explanation = "Elon Musk founded SpaceX.";
    CHECK(quadruplet_violations(good).empty());

    SUBCASE("explanation must contain the answer") {
        good.explanation = "A rocket company from California.";
        CHECK_FALSE(quadruplet_violations(good).empty());
    }
    SUBCASE("answer must differ from the keyword") {
        good.answer = "spacex";
        good.explanation = "SpaceX is SpaceX.";
        CHECK_FALSE(quadruplet_violations(good).empty());
    }
    SUBCASE("fields must be non-empty") {
        good.question = " ";
        CHECK_FALSE(quadruplet_violations(good).empty());
    }
}

TEST_CASE("pair invariants") {
    TwoHopPair pair;
    pair.first = quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1");
    pair.second = quad("Elon Musk", "Where was Elon Musk born?", "Pretoria", "h2");
    CHECK(pair_violations(pair).empty());

    SUBCASE("second question must mention the first answer") {
        pair.second.question = "Where was he born?";
        CHECK_FALSE(pair_violations(pair).empty());
    }
    SUBCASE("second answer must not equal the first keyword") {
        pair.second.answer = "SpaceX";
        pair.second.explanation = "It is SpaceX.";
        CHECK_FALSE(pair_violations(pair).empty());
    }
    SUBCASE("second answer must not equal the first answer") {
        pair.second.answer = "elon musk";
        pair.second.explanation = "It is elon musk.";
        CHECK_FALSE(pair_violations(pair).empty());
    }
}

TEST_CASE("validate_chain accepts a well-formed linear chain") {
    auto c = chain("linear_3", {quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1"),
                                quad("Elon Musk", "Where was Elon Musk born?", "Pretoria", "h2"),
                                quad("Pretoria", "Which country is Pretoria in?", "South Africa",
                                     "h3")});
    CHECK(validate_chain(c).empty());
}

TEST_CASE("shortcut: an intermediate answer reachable from two questions") {
    auto c = chain("linear_3",
                   {quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1"),
                    quad("Elon Musk", "Where was Elon Musk born?", "Pretoria", "h2"),
                    quad("Pretoria", "Did Elon Musk visit Pretoria?", "South Africa", "h3")});
    auto violations = validate_chain(c);
    REQUIRE_FALSE(violations.empty());
    bool found = false;
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::Shortcut && v.hop == 0 && v.other == 2) found = true;
    }
    CHECK(found);
}

TEST_CASE("cycle: hop 1 keyword equals hop 3 answer") {
    auto c = chain("linear_3",
                   {quad("South Africa", "Which city hosts the Union Buildings?", "Pretoria",
                         "h1"),
                    quad("Pretoria", "Which province is Pretoria in?", "Gauteng", "h2"),
                    quad("Gauteng", "Which country is Gauteng part of?", "South Africa", "h3")});
    auto violations = validate_chain(c);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::Cycle);
    CHECK(violations[0].hop == 0);
    CHECK(violations[0].other == 2);
}

TEST_CASE("final answer must not leak into earlier questions") {
    auto c = chain("linear_2",
                   {quad("SpaceX", "Who founded SpaceX in Pretoria?", "Elon Musk", "h1"),
                    quad("Elon Musk", "Where was Elon Musk born?", "Pretoria", "h2")});
    auto violations = validate_chain(c);
    bool leak = false;
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::FinalAnswerLeak) leak = true;
    }
    CHECK(leak);
}

TEST_CASE("missing link when an intermediate answer reaches no later question") {
    auto c = chain("linear_2", {quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1"),
                                quad("Tesla", "Who runs Tesla?", "A Board", "h2")});
    auto violations = validate_chain(c);
    bool missing = false;
    for (const auto& v : violations) {
        if (v.kind == ViolationKind::MissingLink && v.hop == 0) missing = true;
    }
    CHECK(missing);
}

TEST_CASE("joining shapes validate when each answer feeds exactly one question") {
    auto c = chain("join_3",
                   {quad("Marlowe City", "Which country is Marlowe City a part of?", "Vantara",
                         "h1"),
                    quad("Solquent Energy", "Who founded Solquent Energy?", "Tessa Marn", "h2"),
                    quad("Tessa Marn",
                         "Which award did Tessa Marn receive from the government of Vantara?",
                         "Orion Medal", "h3")});
    CHECK(validate_chain(c).empty());
}

TEST_CASE("validate_chain is pure") {
    auto c = chain("linear_2",
                   {quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1"),
                    quad("Elon Musk", "Did Elon Musk live in Pretoria?", "Pretoria", "h2")});
    auto first = validate_chain(c);
    auto second = validate_chain(c);
    CHECK(first == second);
}

TEST_CASE("hop count is enforced") {
    auto one = quad("A", "Q about A?", "B", "h1");
    ReasoningChain c = make_chain("linear_2", {one});
    CHECK_THROWS_AS(validate_chain(c), std::invalid_argument);
}

namespace {

// Random generator of structurally valid pairs: entity names drawn from
// disjoint alphabets so no accidental substring relations arise.
TwoHopPair random_pair(std::mt19937& rng) {
    auto name = [&](const char* stem) {
        return std::string(stem) + std::to_string(rng() % 100000);
    };
    std::string k1 = name("corp");
    std::string a1 = name("person");
    std::string a2 = name("city");
    TwoHopPair pair;
    pair.first = quad(k1, "Who founded " + k1 + "?", a1, name("h"));
    pair.second = quad(a1, "Where was " + a1 + " born?", a2, name("h"));
    return pair;
}

}  // namespace

TEST_CASE("property: a valid pair always yields a valid 2-hop chain") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 200; ++trial) {
        TwoHopPair pair = random_pair(rng);
        REQUIRE(pair_violations(pair).empty());
        auto c = chain("linear_2", {pair.first, pair.second});
        CAPTURE(pair.first.question);
        CHECK(validate_chain(c).empty());
    }
}

TEST_CASE("property: raw casing never changes the validation outcome") {
    std::mt19937 rng(5);
    auto base = chain("linear_2",
                      {quad("SpaceX", "Who founded SpaceX?", "Elon Musk", "h1"),
                       quad("Elon Musk", "Where was Elon Musk born?", "Pretoria", "h2")});
    auto expected = validate_chain(base);
    for (int trial = 0; trial < 30; ++trial) {
        auto mutated = base;
        for (auto& hop : mutated.hops) {
            for (auto* field : {&hop.question, &hop.answer, &hop.keyword}) {
                for (char& ch : *field) {
                    if (std::isalpha(static_cast<unsigned char>(ch)) && rng() % 3 == 0) {
                        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                    }
                }
            }
        }
        CHECK(validate_chain(mutated) == expected);
    }
}

TEST_CASE("id allocator is monotone and zero-padded") {
    IdAllocator ids('h');
    CHECK(ids.next() == "h000001");
    CHECK(ids.next() == "h000002");
}

}  // TEST_SUITE
