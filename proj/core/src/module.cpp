#include "modcomp/module.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

namespace modcomp {

Module::Module(Graph graph, Interface left, Interface right)
    : graph_(std::move(graph)), left_(std::move(left)), right_(std::move(right)) {
    for (const Interface* side : {&left_, &right_}) {
        for (const auto& g : *side) {
            if (!graph_.contains(g.node)) {
                throw InvalidModule("interface node " + g.node.joined() +
                                    " is not a vertex of the module's graph");
            }
        }
    }
    for (const auto& g : left_) {
        const auto other = right_.label_of(g.node);
        if (other && *other != g.label) {
            throw InvalidModule("shared gate " + g.node.joined() +
                                " carries different labels in the two interfaces");
        }
    }
}

std::set<NodeId> Module::interior() const {
    std::set<NodeId> out = graph_.vertices();
    for (const auto& g : left_) out.erase(g.node);
    for (const auto& g : right_) out.erase(g.node);
    return out;
}

bool Module::has_interior() const { return !interior().empty(); }

std::set<NodeId> Module::shared_gates() const {
    std::set<NodeId> out;
    for (const auto& g : left_) {
        if (right_.contains(g.node)) out.insert(g.node);
    }
    return out;
}

std::set<Label> Module::gate_labels() const {
    std::set<Label> out = left_.labels();
    const auto r = right_.labels();
    out.insert(r.begin(), r.end());
    return out;
}

Composed compose(const Module& m, const Module& n) {
    {
        const auto pm = m.prim_ids();
        for (const auto& p : n.prim_ids()) {
            if (pm.count(p)) {
                throw NodeIdCollision("compose: modules share primitive id '" + p + "'");
            }
        }
    }

    GraphComposition gc = compose_graphs(m.graph(), m.right(), n.graph(), n.left());

    // Replacement map for matched shared gates (Def. of shared-gate
    // composition): the matched gate stays an interface element, carried by
    // the merged vertex.
    std::map<NodeId, NodeId> replaced;
    for (const auto& match : gc.merged) {
        const NodeId merged = merge_nodes(match.left.node, match.right.node);
        replaced[match.left.node] = merged;
        replaced[match.right.node] = merged;
    }

    std::vector<Gate> left;
    for (const auto& g : m.left()) {
        auto it = replaced.find(g.node);
        const bool shared_in_m = m.right().contains(g.node);
        if (shared_in_m && it != replaced.end()) {
            left.push_back(Gate{it->second, g.label});
        } else {
            left.push_back(g);
        }
    }
    for (const auto& g : gc.free_right) left.push_back(g); // matchfree(n.left, m.right)

    std::vector<Gate> right;
    for (const auto& g : n.right()) {
        auto it = replaced.find(g.node);
        const bool shared_in_n = n.left().contains(g.node);
        if (shared_in_n && it != replaced.end()) {
            right.push_back(Gate{it->second, g.label});
        } else {
            right.push_back(g);
        }
    }
    for (const auto& g : gc.free_left) right.push_back(g); // matchfree(m.right, n.left)

    Composed out;
    out.module = Module(std::move(gc.graph), Interface(std::move(left)), Interface(std::move(right)));
    out.trace = CompositionTrace{std::move(gc.merged), std::move(gc.free_left), std::move(gc.free_right)};
    return out;
}

Module neutral() { return Module(); }

bool is_perfect_match(const Module& m, const Module& n) {
    return equivalent(m.right(), n.left()).has_value();
}

bool is_entangled(const Module& m, const Module& n) {
    const auto lm = m.gate_labels();
    for (const auto& label : n.gate_labels()) {
        if (lm.count(label)) return true;
    }
    return false;
}

bool interface_equivalent(const Module& m, const Module& n) {
    return equivalent(m.left(), n.left()).has_value() &&
           equivalent(m.right(), n.right()).has_value();
}

bool equal_up_to_interleaving(const Module& m, const Module& n) {
    return equal_up_to_interleaving(m.left(), n.left()) &&
           equal_up_to_interleaving(m.right(), n.right());
}

namespace {

// FNV-1a, for deterministic atom names.
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string content_fingerprint(const Module& m) {
    std::string blob;
    for (const auto& v : m.graph().vertices()) blob += v.joined() + ";";
    blob += "|";
    for (const auto& e : m.graph().edges()) {
        blob += e.src().joined() + (e.directed() ? ">" : "-") + e.dst().joined() + ";";
    }
    blob += "|";
    for (const Interface* side : {&m.left(), &m.right()}) {
        for (const auto& g : *side) blob += g.node.joined() + ":" + g.label + ";";
        blob += "|";
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(blob)));
    return buf;
}

// All gates of both interfaces, shared nodes listed once.
std::vector<Gate> interface_gates(const Module& m) {
    std::vector<Gate> out(m.left().begin(), m.left().end());
    for (const auto& g : m.right()) {
        if (!m.left().contains(g.node)) out.push_back(g);
    }
    return out;
}

} // namespace

Module atom_of(const Module& m) {
    if (is_atomic(m)) return m;
    PrimId name = "atom." + content_fingerprint(m);
    while (m.prim_ids().count(name)) name += "'";
    const NodeId p(name);

    std::set<NodeId> vertices{p};
    std::set<Edge> edges;
    for (const auto& g : interface_gates(m)) {
        vertices.insert(g.node);
        edges.insert(Edge::link(p, g.node));
    }
    return Module(Graph(std::move(vertices), std::move(edges)), m.left(), m.right());
}

Module abstraction_of(const Module& m) {
    std::set<NodeId> vertices;
    for (const auto& g : interface_gates(m)) vertices.insert(g.node);
    return Module(Graph(std::move(vertices), {}), m.left(), m.right());
}

bool is_atomic(const Module& m) {
    const auto inner = m.interior();
    if (inner.size() != 1) return false;
    const NodeId& p = *inner.begin();
    std::set<Edge> expected;
    for (const auto& g : interface_gates(m)) expected.insert(Edge::link(p, g.node));
    return m.graph().edges() == expected;
}

bool is_abstract(const Module& m) {
    return m.interior().empty() && m.graph().edges().empty();
}

Module freshen(const Module& m, const std::string& tag) {
    if (tag.empty()) throw InvalidModule("freshen: tag must be non-empty");
    const auto rename = [&tag](const NodeId& v) {
        std::vector<PrimId> members;
        members.reserve(v.members().size());
        for (const auto& p : v.members()) members.push_back(p + tag);
        return NodeId::from_members(std::move(members));
    };

    std::set<NodeId> vertices;
    for (const auto& v : m.graph().vertices()) vertices.insert(rename(v));
    std::set<Edge> edges;
    for (const auto& e : m.graph().edges()) {
        edges.insert(Edge(rename(e.src()), rename(e.dst()), e.directed()));
    }
    const auto rename_side = [&rename](const Interface& side) {
        std::vector<Gate> gates;
        gates.reserve(side.size());
        for (const auto& g : side) gates.push_back(Gate{rename(g.node), g.label});
        return Interface(std::move(gates));
    };
    return Module(Graph(std::move(vertices), std::move(edges)),
                  rename_side(m.left()), rename_side(m.right()));
}

Module canonical_interface_order(const Module& m) {
    const auto reorder = [](const Interface& side) {
        std::map<Label, std::vector<Gate>> classes;
        for (const auto& g : side) classes[g.label].push_back(g);
        std::vector<Gate> gates;
        gates.reserve(side.size());
        for (auto& [label, group] : classes) {
            for (auto& g : group) gates.push_back(std::move(g));
        }
        return Interface(std::move(gates));
    };
    return Module(m.graph(), reorder(m.left()), reorder(m.right()));
}

} // namespace modcomp
