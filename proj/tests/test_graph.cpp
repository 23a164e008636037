#include <doctest.h>

#include <map>
#include <numeric>

#include <modcomp/graph.hpp>
#include <modcomp/oracles.hpp>
#include <modcomp/random.hpp>

#include "test_helpers.hpp"

using namespace modcomp;
using namespace modcomp::testing;

TEST_CASE("merge_nodes is flat union on disjoint carriers") {
    CHECK(merge_nodes(nid("p"), nid("q")) == NodeId::from_members({"p", "q"}));
    CHECK(merge_nodes(NodeId::from_members({"p", "q"}), nid("r")) ==
          NodeId::from_members({"p", "q", "r"}));
    CHECK_THROWS_AS(merge_nodes(NodeId::from_members({"p", "q"}), nid("p")), NodeIdCollision);
}

TEST_CASE("merge is commutative and associative on small disjoint triples") {
    const std::vector<NodeId> singles = {nid("a"), nid("b"), nid("c"), nid("d")};
    for (const auto& x : singles) {
        for (const auto& y : singles) {
            if (x == y) continue;
            CHECK(merge_nodes(x, y) == merge_nodes(y, x));
            for (const auto& z : singles) {
                if (z == x || z == y) continue;
                CHECK(merge_nodes(merge_nodes(x, y), z) == merge_nodes(x, merge_nodes(y, z)));
            }
        }
    }
}

TEST_CASE("undirected edges are endpoint-order free") {
    CHECK(Edge::link(nid("u"), nid("v")) == Edge::link(nid("v"), nid("u")));
    CHECK(Edge::arrow(nid("u"), nid("v")) != Edge::arrow(nid("v"), nid("u")));
    CHECK(Edge::arrow(nid("u"), nid("v")) != Edge::link(nid("u"), nid("v")));
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph({nid("a")}, {Edge::arrow(nid("a"), nid("zz"))}), InvalidModule);
    // aliasing member sets
    CHECK_THROWS_AS(Graph({nid("a"), NodeId::from_members({"a", "b"})}, {}), InvalidModule);
}

TEST_CASE("compose_graphs: single match merges the two gate nodes") {
    const Graph g({nid("g1")}, {});
    const Graph h({nid("h1")}, {});
    const auto k = compose_graphs(g, iface({gate("g1", "alpha")}), h, iface({gate("h1", "alpha")}));
    CHECK(k.graph.vertices() == std::set<NodeId>{NodeId::from_members({"g1", "h1"})});
    CHECK(k.graph.edges().empty());
    REQUIRE(k.merged.size() == 1);
    CHECK(k.merged[0].left == gate("g1", "alpha"));
    CHECK(k.merged[0].right == gate("h1", "alpha"));
}

TEST_CASE("compose_graphs: empty interfaces give the disjoint union") {
    const Graph g({nid("g1"), nid("g2")}, {Edge::arrow(nid("g1"), nid("g2"))});
    const Graph h({nid("h1")}, {});
    const auto k = compose_graphs(g, Interface(), h, Interface());
    CHECK(k.graph.vertices() == std::set<NodeId>{nid("g1"), nid("g2"), nid("h1")});
    CHECK(k.graph.edges().size() == 1);
}

TEST_CASE("compose_graphs: edges follow their merged endpoints") {
    const Graph g({nid("g0"), nid("g1")}, {Edge::arrow(nid("g0"), nid("g1"))});
    const Graph h({nid("h1"), nid("h2")}, {Edge::arrow(nid("h1"), nid("h2"))});
    const auto k = compose_graphs(g, iface({gate("g1", "alpha")}), h, iface({gate("h1", "alpha")}));
    const NodeId merged = NodeId::from_members({"g1", "h1"});
    CHECK(k.graph.vertices() == std::set<NodeId>{nid("g0"), merged, nid("h2")});
    CHECK(k.graph.edges() ==
          std::set<Edge>{Edge::arrow(nid("g0"), merged), Edge::arrow(merged, nid("h2"))});
}

TEST_CASE("compose_graphs: a match-free gate of A stays a vertex of K") {
    const Graph g({nid("g1"), nid("g2")}, {});
    const auto k = compose_graphs(g, iface({gate("g1", "alpha"), gate("g2", "alpha")}),
                                  Graph({nid("h1")}, {}), iface({gate("h1", "alpha")}));
    CHECK(k.graph.contains(nid("g2")));
    REQUIRE(k.free_left.size() == 1);
    CHECK(k.free_left[0] == gate("g2", "alpha"));
}

TEST_CASE("the one-interface composition of graphs is not associative") {
    // All gates labeled alpha, gate counts 1, 2, 1. Folding with "remaining
    // match-free gates" as the next interface gives different results for
    // the two bracketings; the two-interface module composition does not.
    const Graph l({nid("l1")}, {});
    const Graph m({nid("m1"), nid("m2")}, {});
    const Graph n({nid("n1")}, {});
    const Interface al = iface({gate("l1", "alpha")});
    const Interface am = iface({gate("m1", "alpha"), gate("m2", "alpha")});
    const Interface an = iface({gate("n1", "alpha")});

    const auto lm = compose_graphs(l, al, m, am);
    Interface lm_rest(lm.free_right); // m2 survives
    const auto lm_n = compose_graphs(lm.graph, lm_rest, n, an);

    const auto mn = compose_graphs(m, am, n, an);
    Interface mn_rest(mn.free_left); // m2 survives
    const auto l_mn = compose_graphs(l, al, mn.graph, mn_rest);

    CHECK(lm_n.graph != l_mn.graph);
    CHECK(lm_n.graph.vertices() == std::set<NodeId>{NodeId::from_members({"l1", "m1"}),
                                                    NodeId::from_members({"m2", "n1"})});
    CHECK(l_mn.graph.vertices() == std::set<NodeId>{NodeId::from_members({"l1", "m2"}),
                                                    NodeId::from_members({"m1", "n1"})});
}

TEST_CASE("properties: counting and conservation under composition") {
    GenConfig cfg;
    cfg.seed = 23;
    ModuleGenerator g(cfg);
    for (int trial = 0; trial < 300; ++trial) {
        const Module m1 = g.next();
        const Module m2 = g.next();
        const auto k = compose_graphs(m1.graph(), m1.right(), m2.graph(), m2.left());

        // vertex count
        CHECK(k.graph.vertices().size() ==
              m1.graph().vertices().size() + m2.graph().vertices().size() - k.merged.size());
        // edge conservation: merging collapses, never creates
        CHECK(k.graph.edges().size() <= m1.graph().edges().size() + m2.graph().edges().size());
        // primitive ids are conserved
        auto expected = m1.graph().prim_ids();
        const auto more = m2.graph().prim_ids();
        expected.insert(more.begin(), more.end());
        CHECK(k.graph.prim_ids() == expected);
    }
}

TEST_CASE("compose_graphs agrees with the clause-by-clause oracle") {
    GenConfig cfg;
    cfg.seed = 31;
    cfg.max_interior = 2;
    cfg.max_gates_per_side = 2;
    ModuleGenerator g(cfg);
    for (int trial = 0; trial < 300; ++trial) {
        const Module m1 = g.next();
        const Module m2 = g.next();
        const auto fast = compose_graphs(m1.graph(), m1.right(), m2.graph(), m2.left());
        CHECK(fast.graph == oracle_compose_graphs(m1.graph(), m1.right(), m2.graph(), m2.left()));
    }
}
