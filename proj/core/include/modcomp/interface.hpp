#ifndef MODCOMP_INTERFACE_HPP
#define MODCOMP_INTERFACE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modcomp/errors.hpp"

namespace modcomp {

/// A label drawn from the alphabet Lambda. Equality is exact byte equality.
using Label = std::string;

/// A primitive vertex identifier as authored in a module file.
///
/// Freshening appends a tag to a PrimId; tags produced by this library start
/// with '#', so the original ("base") name is everything before the first '#'.
using PrimId = std::string;

/// Base name of a primitive id: the part before the first freshening tag.
std::string base_prim(const PrimId& p);

/// Canonical identity of a vertex: a flat, non-empty set of primitive ids.
///
/// A vertex is a singleton until composition merges it with a matching gate;
/// merged vertices carry the union of both carriers. The members are kept
/// sorted and duplicate-free so that value equality is set equality.
class NodeId {
public:
    NodeId() = default;
    explicit NodeId(PrimId single) : members_{std::move(single)} {}

    /// Builds a NodeId from arbitrary members. Throws InvalidModule on an
    /// empty set; duplicates collapse by set semantics.
    static NodeId from_members(std::vector<PrimId> members);

    const std::vector<PrimId>& members() const { return members_; }
    bool valid() const { return !members_.empty(); }
    bool singleton() const { return members_.size() == 1; }

    bool disjoint_with(const NodeId& other) const;
    bool contains(const PrimId& p) const;

    /// Members joined with '+', e.g. "g1+h1". Used by the file format.
    std::string joined() const;

    auto operator<=>(const NodeId&) const = default;

private:
    std::vector<PrimId> members_;
};

/// Union of two carrier-disjoint NodeIds. Throws NodeIdCollision when the
/// member sets overlap.
NodeId merge_nodes(const NodeId& x, const NodeId& y);

/// A labeled element of an interface.
struct Gate {
    NodeId node;
    Label label;

    auto operator<=>(const Gate&) const = default;
};

/// A totally ordered finite sequence of gates. The sequence position realizes
/// the total order: gates()[i] is smaller than gates()[j] iff i < j.
class Interface {
public:
    Interface() = default;

    /// Throws InvalidModule if a node occurs twice or a label is empty.
    explicit Interface(std::vector<Gate> gates);

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    auto begin() const { return gates_.begin(); }
    auto end() const { return gates_.end(); }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }

    bool contains(const NodeId& node) const;
    std::optional<Label> label_of(const NodeId& node) const;
    std::vector<NodeId> nodes() const;
    std::set<Label> labels() const;

    /// Number of gates carrying `label`.
    std::size_t count(const Label& label) const;

    /// All primitive ids referenced by this interface's gates.
    std::set<PrimId> prim_ids() const;

    auto operator<=>(const Interface&) const = default;

private:
    std::vector<Gate> gates_;
};

/// Number of gates before g in a that carry g's label.
/// Throws GateNotInInterface if g does not occur in a.
std::size_t rank(const Interface& a, const Gate& g);

/// A matching pair of gates, one per interface: equal label, equal rank.
struct Match {
    Gate left;  // gate of the first interface
    Gate right; // gate of the second interface

    auto operator<=>(const Match&) const = default;
};

/// All matches of a and b: pairs with equal label and equal same-label rank.
/// Each gate occurs in at most one match. The result is ordered by the
/// position of the left gate in a.
/// Throws NodeIdCollision when the interfaces' carriers overlap.
std::vector<Match> matches(const Interface& a, const Interface& b);

/// The gates of a that belong to no match with b, in their a-order.
std::vector<Gate> matchfree(const Interface& a, const Interface& b);

/// A label-preserving, per-label-order-preserving bijection A -> B.
struct InterfaceBijection {
    std::vector<std::pair<Gate, Gate>> pairs;

    /// Image of a gate of A; throws GateNotInInterface if absent.
    const Gate& image(const Gate& a) const;
};

/// The canonical equivalence bijection (k-th lambda-gate of a to the k-th
/// lambda-gate of b) when a and b have equally many gates of every label;
/// absent otherwise.
std::optional<InterfaceBijection> equivalent(const Interface& a, const Interface& b);

/// True when a and b contain the same gates with the same order inside every
/// label class; the order of differently labeled gates may differ. This is
/// equivalence witnessed by the identity mapping on gates, the relation that
/// is invariant under composition order for non-entangled modules.
bool equal_up_to_interleaving(const Interface& a, const Interface& b);

} // namespace modcomp

#endif // MODCOMP_INTERFACE_HPP
