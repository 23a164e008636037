#include "modcomp/oracles.hpp"

#include <algorithm>
#include <optional>

namespace modcomp {

namespace {

// Number of gates before g in a carrying g's label, by plain scanning.
std::size_t smaller_with_same_label(const Interface& a, const Gate& g) {
    std::size_t position = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == g) {
            position = i;
            break;
        }
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < position; ++i) {
        if (a[i].label == g.label) ++n;
    }
    return n;
}

} // namespace

std::vector<Match> oracle_matches(const Interface& a, const Interface& b) {
    std::vector<Match> out;
    for (const auto& ga : a) {
        for (const auto& gb : b) {
            if (ga.label != gb.label) continue;
            if (smaller_with_same_label(a, ga) == smaller_with_same_label(b, gb)) {
                out.push_back(Match{ga, gb});
            }
        }
    }
    return out;
}

std::vector<Gate> oracle_matchfree(const Interface& a, const Interface& b) {
    const auto all = oracle_matches(a, b);
    std::vector<Gate> out;
    for (const auto& ga : a) {
        const bool in_match = std::any_of(all.begin(), all.end(),
                                          [&ga](const Match& m) { return m.left == ga; });
        if (!in_match) out.push_back(ga);
    }
    return out;
}

Graph oracle_compose_graphs(const Graph& g, const Interface& a,
                            const Graph& h, const Interface& b) {
    const auto match_set = oracle_matches(a, b);

    const auto matched_partner = [&match_set](const NodeId& v) -> std::optional<NodeId> {
        for (const auto& m : match_set) {
            if (m.left.node == v) return merge_nodes(m.left.node, m.right.node);
            if (m.right.node == v) return merge_nodes(m.left.node, m.right.node);
        }
        return std::nullopt;
    };

    // Nodes: (G \ A) ∪ (H \ B) ∪ matches(A, B) ∪ matchfree(A, B) ∪ matchfree(B, A).
    std::set<NodeId> nodes;
    for (const auto& v : g.vertices()) {
        if (!a.contains(v)) nodes.insert(v);
    }
    for (const auto& v : h.vertices()) {
        if (!b.contains(v)) nodes.insert(v);
    }
    for (const auto& m : match_set) nodes.insert(merge_nodes(m.left.node, m.right.node));
    for (const auto& gate : oracle_matchfree(a, b)) nodes.insert(gate.node);
    for (const auto& gate : oracle_matchfree(b, a)) nodes.insert(gate.node);

    // Edges, the four cases: match-free endpoints stay, matched endpoints
    // become their match.
    std::set<Edge> edges;
    for (const Graph* part : {&g, &h}) {
        for (const auto& e : part->edges()) {
            const auto x = matched_partner(e.src());
            const auto y = matched_partner(e.dst());
            if (!x && !y) {
                edges.insert(e);
            } else if (!x && y) {
                edges.insert(Edge(e.src(), *y, e.directed()));
            } else if (x && !y) {
                edges.insert(Edge(*x, e.dst(), e.directed()));
            } else {
                edges.insert(Edge(*x, *y, e.directed()));
            }
        }
    }
    return Graph(std::move(nodes), std::move(edges));
}

} // namespace modcomp
