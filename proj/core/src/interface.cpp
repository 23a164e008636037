#include "modcomp/interface.hpp"

#include <algorithm>
#include <map>

namespace modcomp {

std::string base_prim(const PrimId& p) {
    auto pos = p.find('#');
    return pos == std::string::npos ? p : p.substr(0, pos);
}

NodeId NodeId::from_members(std::vector<PrimId> members) {
    if (members.empty()) {
        throw InvalidModule("NodeId must have at least one member");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    NodeId id;
    id.members_ = std::move(members);
    return id;
}

bool NodeId::disjoint_with(const NodeId& other) const {
    // both member vectors are sorted
    auto it = members_.begin();
    auto jt = other.members_.begin();
    while (it != members_.end() && jt != other.members_.end()) {
        if (*it == *jt) return false;
        if (*it < *jt) {
            ++it;
        } else {
            ++jt;
        }
    }
    return true;
}

bool NodeId::contains(const PrimId& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

std::string NodeId::joined() const {
    std::string out;
    for (const auto& m : members_) {
        if (!out.empty()) out += '+';
        out += m;
    }
    return out;
}

NodeId merge_nodes(const NodeId& x, const NodeId& y) {
    if (!x.disjoint_with(y)) {
        throw NodeIdCollision("merge_nodes: carriers of " + x.joined() + " and " +
                              y.joined() + " overlap");
    }
    std::vector<PrimId> all = x.members();
    all.insert(all.end(), y.members().begin(), y.members().end());
    return NodeId::from_members(std::move(all));
}

Interface::Interface(std::vector<Gate> gates) : gates_(std::move(gates)) {
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (gates_[i].label.empty()) {
            throw InvalidModule("interface gate " + std::to_string(i) + " has an empty label");
        }
        if (!gates_[i].node.valid()) {
            throw InvalidModule("interface gate " + std::to_string(i) + " has an empty node");
        }
        for (std::size_t j = i + 1; j < gates_.size(); ++j) {
            if (gates_[i].node == gates_[j].node) {
                throw InvalidModule("node " + gates_[i].node.joined() +
                                    " occurs twice in one interface");
            }
        }
    }
}

bool Interface::contains(const NodeId& node) const {
    return label_of(node).has_value();
}

std::optional<Label> Interface::label_of(const NodeId& node) const {
    for (const auto& g : gates_) {
        if (g.node == node) return g.label;
    }
    return std::nullopt;
}

std::vector<NodeId> Interface::nodes() const {
    std::vector<NodeId> out;
    out.reserve(gates_.size());
    for (const auto& g : gates_) out.push_back(g.node);
    return out;
}

std::set<Label> Interface::labels() const {
    std::set<Label> out;
    for (const auto& g : gates_) out.insert(g.label);
    return out;
}

std::size_t Interface::count(const Label& label) const {
    std::size_t n = 0;
    for (const auto& g : gates_) {
        if (g.label == label) ++n;
    }
    return n;
}

std::set<PrimId> Interface::prim_ids() const {
    std::set<PrimId> out;
    for (const auto& g : gates_) {
        out.insert(g.node.members().begin(), g.node.members().end());
    }
    return out;
}

std::size_t rank(const Interface& a, const Gate& g) {
    std::size_t r = 0;
    for (const auto& h : a) {
        if (h == g) return r;
        if (h.label == g.label) ++r;
    }
    throw GateNotInInterface("gate " + g.node.joined() + ":" + g.label +
                             " does not occur in the interface");
}

namespace {

void require_disjoint_carriers(const Interface& a, const Interface& b, const char* op) {
    const auto pa = a.prim_ids();
    for (const auto& p : b.prim_ids()) {
        if (pa.count(p)) {
            throw NodeIdCollision(std::string(op) + ": interfaces share primitive id '" + p + "'");
        }
    }
}

// Gates of `a` grouped by label, in interface order.
std::map<Label, std::vector<Gate>> label_classes(const Interface& a) {
    std::map<Label, std::vector<Gate>> out;
    for (const auto& g : a) out[g.label].push_back(g);
    return out;
}

} // namespace

std::vector<Match> matches(const Interface& a, const Interface& b) {
    require_disjoint_carriers(a, b, "matches");
    // The k-th lambda-gate of a matches the k-th lambda-gate of b; report
    // the pairs ordered by the left gate's position in a.
    const auto classes_b = label_classes(b);
    std::map<Label, std::size_t> used;
    std::vector<Match> out;
    for (const auto& g : a) {
        auto it = classes_b.find(g.label);
        if (it == classes_b.end()) continue;
        std::size_t k = used[g.label]++;
        if (k < it->second.size()) {
            out.push_back(Match{g, it->second[k]});
        }
    }
    return out;
}

std::vector<Gate> matchfree(const Interface& a, const Interface& b) {
    require_disjoint_carriers(a, b, "matchfree");
    const auto classes_b = label_classes(b);
    std::map<Label, std::size_t> seen;
    std::vector<Gate> out;
    for (const auto& g : a) {
        std::size_t k = seen[g.label]++;
        auto it = classes_b.find(g.label);
        const std::size_t partners = it == classes_b.end() ? 0 : it->second.size();
        if (k >= partners) out.push_back(g);
    }
    return out;
}

const Gate& InterfaceBijection::image(const Gate& a) const {
    for (const auto& [from, to] : pairs) {
        if (from == a) return to;
    }
    throw GateNotInInterface("gate " + a.node.joined() + ":" + a.label +
                             " is not in the bijection's domain");
}

std::optional<InterfaceBijection> equivalent(const Interface& a, const Interface& b) {
    const auto classes_a = label_classes(a);
    const auto classes_b = label_classes(b);
    if (classes_a.size() != classes_b.size()) return std::nullopt;
    for (const auto& [label, gates] : classes_a) {
        auto it = classes_b.find(label);
        if (it == classes_b.end() || it->second.size() != gates.size()) return std::nullopt;
    }
    InterfaceBijection phi;
    std::map<Label, std::size_t> next;
    for (const auto& g : a) {
        phi.pairs.emplace_back(g, classes_b.at(g.label)[next[g.label]++]);
    }
    return phi;
}

bool equal_up_to_interleaving(const Interface& a, const Interface& b) {
    return label_classes(a) == label_classes(b);
}

} // namespace modcomp
