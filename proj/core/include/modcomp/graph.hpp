#ifndef MODCOMP_GRAPH_HPP
#define MODCOMP_GRAPH_HPP

#include <set>
#include <vector>

#include "modcomp/interface.hpp"

namespace modcomp {

/// An edge between two vertices, directed or undirected. An undirected edge
/// stores its endpoints in sorted order so that {u,v} and {v,u} compare equal.
class Edge {
public:
    Edge() = default;
    Edge(NodeId src, NodeId dst, bool directed);

    static Edge arrow(NodeId src, NodeId dst) { return Edge(std::move(src), std::move(dst), true); }
    static Edge link(NodeId u, NodeId v) { return Edge(std::move(u), std::move(v), false); }

    const NodeId& src() const { return src_; }
    const NodeId& dst() const { return dst_; }
    bool directed() const { return directed_; }

    auto operator<=>(const Edge&) const = default;

private:
    NodeId src_;
    NodeId dst_;
    bool directed_ = true;
};

/// A finite graph over NodeId vertices with mixed directed/undirected edges.
///
/// Invariants: edge endpoints are vertices, and the member sets of all
/// vertices are pairwise disjoint (so merges can never alias).
class Graph {
public:
    Graph() = default;
    Graph(std::set<NodeId> vertices, std::set<Edge> edges);

    const std::set<NodeId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    bool contains(const NodeId& v) const { return vertices_.count(v) != 0; }
    bool empty() const { return vertices_.empty(); }

    /// Every primitive id occurring in some vertex.
    std::set<PrimId> prim_ids() const;

    bool operator==(const Graph&) const = default;

private:
    std::set<NodeId> vertices_;
    std::set<Edge> edges_;
};

/// Result of composing two graphs along two interfaces: the composed graph
/// plus the bookkeeping needed by module composition and quotients.
struct GraphComposition {
    Graph graph;
    std::vector<Match> merged;    // matches of a and b, merged into one vertex each
    std::vector<Gate> free_left;  // matchfree(a, b), in a-order
    std::vector<Gate> free_right; // matchfree(b, a), in b-order
};

/// Composes g and h along the interfaces a (over g) and b (over h): matched
/// gates merge into flat-union vertices, match-free gates survive, and every
/// edge is carried over with merged endpoints substituted. Duplicate result
/// edges collapse by set semantics; directedness is preserved.
///
/// Throws InterfaceNotInGraph if a gate node is not a vertex of its graph,
/// NodeIdCollision if the carriers of g and h overlap.
GraphComposition compose_graphs(const Graph& g, const Interface& a,
                                const Graph& h, const Interface& b);

} // namespace modcomp

#endif // MODCOMP_GRAPH_HPP
