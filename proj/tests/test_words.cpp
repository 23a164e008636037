#include <doctest.h>

#include <modcomp/canonical.hpp>
#include <modcomp/generate.hpp>
#include <modcomp/words.hpp>

using namespace modcomp;

namespace {

const Alphabet kSigma("abc");

std::vector<std::string> words_up_to(int max_len, const std::string& symbols) {
    std::vector<std::string> out{""};
    std::size_t start = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i) {
            for (char s : symbols) out.push_back(out[i] + s);
        }
        start = end;
    }
    return out;
}

Module concat(const Module& u, const Module& v) {
    return compose(freshen(u, "#u"), freshen(v, "#v")).module;
}

} // namespace

TEST_CASE("symbol_module is a 3-vertex atomic chain link") {
    const Module ma = symbol_module('a', kSigma);
    CHECK(ma.graph().vertices().size() == 3);
    CHECK(ma.graph().edges().size() == 2);
    CHECK(is_atomic(ma));
    CHECK(ma.left().size() == 1);
    CHECK(ma.right().size() == 1);

    const Module mb = symbol_module('b', kSigma);
    CHECK(ma != mb);
    CHECK(interface_equivalent(ma, mb));

    CHECK_THROWS_AS(symbol_module('z', kSigma), SymbolNotInAlphabet);
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(""), InvalidModule);
    CHECK_THROWS_AS(Alphabet("aa"), InvalidModule);
    CHECK_THROWS_AS(Alphabet("a#"), InvalidModule);
    CHECK(Alphabet::lowercase().contains('q'));
}

TEST_CASE("module_to_word inverts word_to_module for all words up to length 8") {
    for (const auto& w : words_up_to(8, "abc")) {
        CHECK(module_to_word(word_to_module(w, kSigma)) == w);
    }
}

TEST_CASE("the empty word module is the monoid identity") {
    const Module eps = word_to_module("", kSigma);
    const Module a = word_to_module("a", kSigma);
    CHECK(module_to_word(concat(eps, a)) == "a");
    CHECK(module_to_word(concat(a, eps)) == "a");
    CHECK(module_to_word(concat(eps, eps)) == "");
}

TEST_CASE("decoding rejects modules without chain shape") {
    CHECK_THROWS_AS(module_to_word(neutral()), NotAWordModule);

    // control gates with a non-control label
    const NodeId g("g");
    const Module wrong(Graph({g}, {}), Interface({Gate{g, "alpha"}}), Interface({Gate{g, "alpha"}}));
    CHECK_THROWS_AS(module_to_word(wrong), NotAWordModule);

    // a directed edge in the chain
    const NodeId in("a.L"), slot("a"), out("a.R");
    const Module directed(Graph({in, slot, out}, {Edge::arrow(slot, in), Edge::link(slot, out)}),
                          Interface({Gate{in, kControlLabel}}),
                          Interface({Gate{out, kControlLabel}}));
    CHECK_THROWS_AS(module_to_word(directed), NotAWordModule);
}

TEST_CASE("word encoding is a monoid homomorphism (exhaustive, length <= 3)") {
    const auto words = words_up_to(3, "abc");
    for (const auto& u : words) {
        for (const auto& v : words) {
            CHECK(module_to_word(concat(word_to_module(u, kSigma), word_to_module(v, kSigma))) ==
                  u + v);
        }
    }
}

TEST_CASE("distinct words give structurally distinct modules") {
    const auto words = words_up_to(3, "ab");
    for (const auto& u : words) {
        for (const auto& v : words) {
            CHECK(equal_modulo_freshening(word_to_module(u, kSigma), word_to_module(v, kSigma)) ==
                  (u == v));
        }
    }
    // in particular the two orders of a two-symbol word differ
    CHECK_FALSE(equal_modulo_freshening(word_to_module("ab", kSigma),
                                        word_to_module("ba", kSigma)));
}

TEST_CASE("chains compose associatively as values") {
    const Module a = freshen(symbol_module('a', kSigma), "#0");
    const Module b = freshen(symbol_module('b', kSigma), "#1");
    const Module c = freshen(symbol_module('c', kSigma), "#2");
    CHECK(compose(compose(a, b).module, c).module == compose(a, compose(b, c).module).module);
}

TEST_CASE("the symbol modules finitely generate the bounded word modules") {
    const std::vector<Module> basis = {symbol_module('a', kSigma), symbol_module('b', kSigma),
                                       symbol_module('c', kSigma)};
    // chains of k symbols have 2k+1 vertices; 7 vertices bound length 3
    const auto closure = generate(basis, 7);
    CHECK(closure.size() == 3 + 9 + 27);

    std::set<std::string> expected;
    for (const auto& w : words_up_to(3, "abc")) {
        if (!w.empty()) expected.insert(canonical_key(word_to_module(w, kSigma)));
    }
    std::set<std::string> got;
    for (const auto& m : closure) got.insert(canonical_key(m));
    CHECK(got == expected);
}
