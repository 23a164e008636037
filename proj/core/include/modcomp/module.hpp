#ifndef MODCOMP_MODULE_HPP
#define MODCOMP_MODULE_HPP

#include <set>
#include <string>
#include <vector>

#include "modcomp/graph.hpp"
#include "modcomp/interface.hpp"

namespace modcomp {

/// A module: a graph together with a left and a right interface over its
/// vertices. A node may belong to both interfaces (a shared gate), in which
/// case it must carry the same label on both sides. The interior is the set
/// of vertices belonging to neither interface.
///
/// Modules are immutable values; equality is structural (vertex sets of flat
/// NodeIds, edge sets, interface sequences with labels).
class Module {
public:
    Module() = default; // the neutral module

    /// Throws InvalidModule when an interface node is not a vertex or a
    /// shared node carries different labels on the two sides.
    Module(Graph graph, Interface left, Interface right);

    const Graph& graph() const { return graph_; }
    const Interface& left() const { return left_; }
    const Interface& right() const { return right_; }

    std::set<NodeId> interior() const;
    bool has_interior() const;

    /// Nodes belonging to both interfaces.
    std::set<NodeId> shared_gates() const;
    bool has_shared_gates() const { return !shared_gates().empty(); }

    /// Union of the label sets of both interfaces.
    std::set<Label> gate_labels() const;

    std::set<PrimId> prim_ids() const { return graph_.prim_ids(); }

    bool operator==(const Module&) const = default;

private:
    Graph graph_;
    Interface left_;
    Interface right_;
};

/// Audit record of one composition: which gates merged and which stayed free.
struct CompositionTrace {
    std::vector<Match> merged;     // matches of m.right and n.left
    std::vector<Gate> left_free;   // matchfree(m.right, n.left)
    std::vector<Gate> right_free;  // matchfree(n.left, m.right)
};

struct Composed {
    Module module;
    CompositionTrace trace;
};

/// The composition m . n: the graphs are composed along m's right and n's
/// left interface; the composed left interface is m's left followed by the
/// match-free gates of n's left, the composed right interface is n's right
/// followed by the match-free gates of m's right; matched shared gates stay
/// interface elements, replaced in place by their merged vertex.
///
/// Throws NodeIdCollision when the operands' carriers overlap.
Composed compose(const Module& m, const Module& n);

/// The neutral module E: empty graph, empty interfaces. m . E = E . m = m.
Module neutral();

/// True iff m's right and n's left interface are equivalent, so composition
/// consumes both completely.
bool is_perfect_match(const Module& m, const Module& n);

/// True iff some gate of m and some gate of n carry the same label.
bool is_entangled(const Module& m, const Module& n);

/// True iff the left interfaces are equivalent and the right interfaces are
/// equivalent (per-label gate counts agree on both sides).
bool interface_equivalent(const Module& m, const Module& n);

/// Both interfaces equal up to reordering of differently labeled gates; the
/// relation under which composition of non-entangled modules commutes.
bool equal_up_to_interleaving(const Module& m, const Module& n);

/// The atom of m: same interfaces, one fresh interior vertex (the name,
/// derived deterministically from m's content) linked to every gate by an
/// undirected edge. Atomic modules are returned unchanged, so the operation
/// is idempotent.
Module atom_of(const Module& m);

/// The abstraction of m: the empty module with m's interfaces — gate nodes
/// only, no interior vertices, no edges.
Module abstraction_of(const Module& m);

/// Exactly one interior vertex, linked to each gate by an undirected edge,
/// and no other edges.
bool is_atomic(const Module& m);

/// No interior vertices and no edges.
bool is_abstract(const Module& m);

/// Structurally identical module with `tag` appended to every primitive id.
/// Throws InvalidModule on an empty tag.
Module freshen(const Module& m, const std::string& tag);

/// Interfaces reordered into label-lexicographic form (gates grouped by
/// label, groups sorted by label, order within a label preserved). The
/// result is interface equivalent to m and has the canonical gate order
/// that quotient reconstruction yields.
Module canonical_interface_order(const Module& m);

} // namespace modcomp

#endif // MODCOMP_MODULE_HPP
