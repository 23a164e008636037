#include <doctest.h>

#include <algorithm>
#include <set>

#include <modcomp/interface.hpp>
#include <modcomp/oracles.hpp>
#include <modcomp/random.hpp>

#include "test_helpers.hpp"

using namespace modcomp;
using namespace modcomp::testing;

TEST_CASE("rank counts earlier equally labeled gates") {
    const Interface a = iface({gate("a", "alpha"), gate("b", "beta"), gate("c", "alpha")});
    CHECK(rank(a, gate("c", "alpha")) == 1);
    CHECK(rank(a, gate("a", "alpha")) == 0);
    CHECK(rank(a, gate("b", "beta")) == 0);

    const Interface single = iface({gate("a", "alpha")});
    CHECK(rank(single, gate("a", "alpha")) == 0);

    const Interface two = iface({gate("a", "alpha"), gate("b", "beta")});
    CHECK(rank(two, gate("b", "beta")) == 0);

    CHECK_THROWS_AS(rank(a, gate("zz", "alpha")), GateNotInInterface);
}

TEST_CASE("matches pairs equally labeled gates of equal rank") {
    // the two-interface picture: A = [a:alpha, b:beta, c:alpha],
    // B = [d:alpha, e:beta, f:beta] has matches {a,d}, {b,e}
    const Interface a = iface({gate("a", "alpha"), gate("b", "beta"), gate("c", "alpha")});
    const Interface b = iface({gate("d", "alpha"), gate("e", "beta"), gate("f", "beta")});

    const auto ms = matches(a, b);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].left == gate("a", "alpha"));
    CHECK(ms[0].right == gate("d", "alpha"));
    CHECK(ms[1].left == gate("b", "beta"));
    CHECK(ms[1].right == gate("e", "beta"));

    const auto free_a = matchfree(a, b);
    REQUIRE(free_a.size() == 1);
    CHECK(free_a[0] == gate("c", "alpha"));
    const auto free_b = matchfree(b, a);
    REQUIRE(free_b.size() == 1);
    CHECK(free_b[0] == gate("f", "beta"));
}

TEST_CASE("matches edge cases") {
    CHECK(matches(Interface(), iface({gate("d", "alpha")})).empty());
    CHECK(matches(iface({gate("x", "alpha")}), iface({gate("y", "beta")})).empty());
    CHECK(matchfree(Interface(), iface({gate("d", "alpha")})).empty());

    // two alpha gates against one: the second stays free
    const auto fr = matchfree(iface({gate("a", "alpha"), gate("a2", "alpha")}),
                              iface({gate("b", "alpha")}));
    REQUIRE(fr.size() == 1);
    CHECK(fr[0] == gate("a2", "alpha"));

    CHECK_THROWS_AS(matches(iface({gate("a", "alpha")}), iface({gate("a", "alpha")})),
                    NodeIdCollision);
}

TEST_CASE("interface construction rejects duplicate nodes and empty labels") {
    CHECK_THROWS_AS(iface({gate("a", "alpha"), gate("a", "beta")}), InvalidModule);
    CHECK_THROWS_AS(iface({gate("a", "")}), InvalidModule);
}

TEST_CASE("equivalent returns the canonical per-label bijection") {
    const Interface a = iface({gate("a", "alpha"), gate("b", "beta")});
    const Interface b = iface({gate("c", "beta"), gate("d", "alpha")});
    const auto phi = equivalent(a, b);
    REQUIRE(phi.has_value());
    CHECK(phi->image(gate("a", "alpha")) == gate("d", "alpha"));
    CHECK(phi->image(gate("b", "beta")) == gate("c", "beta"));

    const auto id = equivalent(a, a);
    REQUIRE(id.has_value());
    for (const auto& [from, to] : id->pairs) CHECK(from == to);

    CHECK_FALSE(equivalent(iface({gate("a", "alpha"), gate("a2", "alpha")}),
                           iface({gate("b", "alpha")}))
                    .has_value());
}

TEST_CASE("equivalent on the 2-gate case agrees with enumerating all bijections") {
    // Oracle: enumerate both bijections of {a,b} -> {c,d} and keep those
    // satisfying the two clauses literally.
    const Interface a = iface({gate("a", "alpha"), gate("b", "beta")});
    const Interface b = iface({gate("c", "beta"), gate("d", "alpha")});
    int witnesses = 0;
    const std::vector<std::vector<int>> perms = {{0, 1}, {1, 0}};
    for (const auto& p : perms) {
        bool ok = true;
        for (int i = 0; i < 2; ++i) {
            if (a[i].label != b[p[i]].label) ok = false;
        }
        // clause 2 is vacuous here: no two equally labeled gates in a
        if (ok) ++witnesses;
    }
    CHECK(witnesses == 1);
    CHECK(equivalent(a, b).has_value());
}

namespace {

std::vector<Label> pool3() { return {"l0", "l1", "l2"}; }

} // namespace

TEST_CASE("properties: uniqueness, partition, symmetry against the oracle") {
    GenConfig cfg;
    cfg.seed = 7;
    ModuleGenerator g(cfg);
    for (int trial = 0; trial < 300; ++trial) {
        const Interface a = g.next_interface(pool3());
        const Interface b = g.next_interface(pool3());
        const auto ms = matches(a, b);

        // each gate of a occurs in at most one match
        std::set<Gate> seen;
        for (const auto& m : ms) CHECK(seen.insert(m.left).second);

        // gates(a) = matched(a) + matchfree(a,b), as sets
        const auto fr = matchfree(a, b);
        CHECK(ms.size() + fr.size() == a.size());
        for (const auto& gte : fr) {
            CHECK(std::none_of(ms.begin(), ms.end(),
                               [&](const Match& m) { return m.left == gte; }));
        }

        // symmetry: {a,b} in matches(A,B) iff {b,a} in matches(B,A)
        const auto sm = matches(b, a);
        CHECK(sm.size() == ms.size());
        for (const auto& m : ms) {
            CHECK(std::any_of(sm.begin(), sm.end(), [&](const Match& s) {
                return s.left == m.right && s.right == m.left;
            }));
        }

        // brute-force oracle agreement (interfaces here have <= 6 gates)
        CHECK(ms == oracle_matches(a, b));
        CHECK(fr == oracle_matchfree(a, b));
    }
}

TEST_CASE("equivalent is an equivalence relation") {
    GenConfig cfg;
    cfg.seed = 11;
    ModuleGenerator g(cfg);
    for (int trial = 0; trial < 200; ++trial) {
        const Interface a = g.next_interface(pool3());
        CHECK(equivalent(a, a).has_value()); // reflexive

        const Interface b = g.next_interface(pool3());
        const Interface c = g.next_interface(pool3());
        const auto ab = equivalent(a, b);
        CHECK(ab.has_value() == equivalent(b, a).has_value()); // symmetric
        if (ab && equivalent(b, c)) {
            CHECK(equivalent(a, c).has_value()); // transitive
        }
    }
}
