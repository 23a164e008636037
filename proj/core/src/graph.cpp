#include "modcomp/graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace modcomp {

Edge::Edge(NodeId src, NodeId dst, bool directed)
    : src_(std::move(src)), dst_(std::move(dst)), directed_(directed) {
    if (!directed_ && dst_ < src_) std::swap(src_, dst_);
}

Graph::Graph(std::set<NodeId> vertices, std::set<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<PrimId> seen;
    for (const auto& v : vertices_) {
        if (!v.valid()) throw InvalidModule("graph vertex with empty member set");
        for (const auto& p : v.members()) {
            if (!seen.insert(p).second) {
                throw InvalidModule("primitive id '" + p + "' occurs in two vertices");
            }
        }
    }
    for (const auto& e : edges_) {
        if (!vertices_.count(e.src()) || !vertices_.count(e.dst())) {
            throw InvalidModule("edge (" + e.src().joined() + ", " + e.dst().joined() +
                                ") has an endpoint outside the vertex set");
        }
    }
}

std::set<PrimId> Graph::prim_ids() const {
    std::set<PrimId> out;
    for (const auto& v : vertices_) {
        out.insert(v.members().begin(), v.members().end());
    }
    return out;
}

GraphComposition compose_graphs(const Graph& g, const Interface& a,
                                const Graph& h, const Interface& b) {
    for (const auto& gate : a) {
        if (!g.contains(gate.node)) {
            throw InterfaceNotInGraph("interface gate " + gate.node.joined() +
                                      " is not a vertex of the left graph");
        }
    }
    for (const auto& gate : b) {
        if (!h.contains(gate.node)) {
            throw InterfaceNotInGraph("interface gate " + gate.node.joined() +
                                      " is not a vertex of the right graph");
        }
    }
    {
        const auto pg = g.prim_ids();
        for (const auto& p : h.prim_ids()) {
            if (pg.count(p)) {
                throw NodeIdCollision("compose_graphs: graphs share primitive id '" + p + "'");
            }
        }
    }

    GraphComposition out;
    out.merged = matches(a, b);
    out.free_left = matchfree(a, b);
    out.free_right = matchfree(b, a);

    // Matched gate nodes are substituted by their merged vertex; every other
    // node carries over unchanged.
    std::map<NodeId, NodeId> subst;
    for (const auto& m : out.merged) {
        const NodeId merged = merge_nodes(m.left.node, m.right.node);
        subst[m.left.node] = merged;
        subst[m.right.node] = merged;
    }
    const auto substituted = [&subst](const NodeId& v) {
        auto it = subst.find(v);
        return it == subst.end() ? v : it->second;
    };

    std::set<NodeId> vertices;
    const auto a_nodes = a.nodes();
    const auto b_nodes = b.nodes();
    for (const auto& v : g.vertices()) {
        if (std::find(a_nodes.begin(), a_nodes.end(), v) == a_nodes.end()) vertices.insert(v);
    }
    for (const auto& v : h.vertices()) {
        if (std::find(b_nodes.begin(), b_nodes.end(), v) == b_nodes.end()) vertices.insert(v);
    }
    for (const auto& [from, to] : subst) vertices.insert(to);
    for (const auto& gate : out.free_left) vertices.insert(gate.node);
    for (const auto& gate : out.free_right) vertices.insert(gate.node);

    std::set<Edge> edges;
    for (const Graph* part : {&g, &h}) {
        for (const auto& e : part->edges()) {
            edges.insert(Edge(substituted(e.src()), substituted(e.dst()), e.directed()));
        }
    }

    out.graph = Graph(std::move(vertices), std::move(edges));
    return out;
}

} // namespace modcomp
