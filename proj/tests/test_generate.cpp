#include <doctest.h>

#include <modcomp/canonical.hpp>
#include <modcomp/generate.hpp>
#include <modcomp/words.hpp>

#include "test_helpers.hpp"

using namespace modcomp;
using namespace modcomp::testing;

TEST_CASE("generate of nothing is nothing") {
    CHECK(generate({}, 5).empty());
}

TEST_CASE("generate of the neutral module is just the neutral module") {
    const auto closure = generate({neutral()}, 5);
    REQUIRE(closure.size() == 1);
    CHECK(closure[0] == neutral());
}

TEST_CASE("generate rejects a non-positive bound") {
    CHECK_THROWS_AS(generate({neutral()}, 0), PreconditionViolated);
}

TEST_CASE("generate dedups the same module arriving through different tags") {
    const Alphabet sigma("ab");
    const Module ma = symbol_module('a', sigma);
    // a alone and a . E-chain both canonicalize to the same key
    const auto closure = generate({ma}, 5);
    REQUIRE(closure.size() == 2); // "a" and "aa" fit in 5 vertices
    CHECK(equal_modulo_freshening(closure[0], ma) !=
          equal_modulo_freshening(closure[1], ma)); // exactly one is "a"
}

TEST_CASE("the neutral module folds into other members") {
    const Alphabet sigma("ab");
    const auto closure = generate({neutral(), symbol_module('a', sigma)}, 3);
    // E, "a"; E.E = E, E.a = a, a.E = a dedup away
    CHECK(closure.size() == 2);
}

TEST_CASE("closure contents match the word oracle for two symbols, length <= 2") {
    const Alphabet sigma("ab");
    const auto closure =
        generate({symbol_module('a', sigma), symbol_module('b', sigma)}, 5);
    std::set<std::string> got;
    for (const auto& m : closure) got.insert(module_to_word(m));
    CHECK(got == std::set<std::string>{"a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("generated modules dedup up to cross-label interface reordering") {
    const Module x = make_module({"a", "b"}, {}, {gate("a", "alpha"), gate("b", "beta")}, {});
    const Module y = make_module({"a", "b"}, {}, {gate("b", "beta"), gate("a", "alpha")}, {});
    REQUIRE(x != y);
    const auto closure = generate({x, y}, 4);
    // x and y differ only in gate interleaving, so one representative remains
    std::size_t members = 0;
    for (const auto& m : closure) {
        if (m == x || m == y) ++members;
    }
    CHECK(members == 1);
    for (std::size_t i = 0; i < closure.size(); ++i) {
        for (std::size_t j = i + 1; j < closure.size(); ++j) {
            CHECK(canonical_key(canonical_interface_order(closure[i])) !=
                  canonical_key(canonical_interface_order(closure[j])));
        }
    }
}
