#include "modcomp/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace modcomp {

namespace {

// How a q-vertex relates to the divisor's primitive-id carrier.
enum class Side { Divisor, Factor, Merged };

struct SplitVertex {
    Side side;
    NodeId divisor_part; // valid for Divisor and Merged
    NodeId factor_part;  // valid for Factor and Merged
};

std::optional<SplitVertex> split_vertex(const NodeId& v, const std::set<PrimId>& divisor_prims) {
    std::vector<PrimId> div, fac;
    for (const auto& p : v.members()) {
        (divisor_prims.count(p) ? div : fac).push_back(p);
    }
    SplitVertex out;
    if (fac.empty()) {
        out.side = Side::Divisor;
        out.divisor_part = v;
    } else if (div.empty()) {
        out.side = Side::Factor;
        out.factor_part = v;
    } else {
        out.side = Side::Merged;
        out.divisor_part = NodeId::from_members(std::move(div));
        out.factor_part = NodeId::from_members(std::move(fac));
    }
    return out;
}

// Shared machinery for both quotient directions. The "divisor" is the known
// module (k on the left, n on the right); `left_division` selects which
// equation compose solves: k . p = q versus p . n = q.
std::optional<Module> divide(const Module& q, const Module& divisor, bool left_division) {
    const std::set<PrimId> dprims = divisor.prim_ids();

    // The divisor's interface that was consumed by the composition, and the
    // q-interface that starts with the divisor's surviving side.
    const Interface& consumed = left_division ? divisor.right() : divisor.left();
    const Interface& kept = left_division ? divisor.left() : divisor.right();
    const Interface& q_kept_side = left_division ? q.left() : q.right();  // divisor head, factor-free tail
    const Interface& q_mixed_side = left_division ? q.right() : q.left(); // factor head, divisor-free tail

    // 1. Partition q's vertices against the divisor carrier.
    std::map<NodeId, SplitVertex> split;
    std::set<NodeId> divisor_vertices;
    std::map<NodeId, NodeId> merged_by_consumed_gate; // consumed-gate node -> merged q-vertex
    for (const auto& v : q.graph().vertices()) {
        auto s = split_vertex(v, dprims);
        if (!s) return std::nullopt;
        if (s->side == Side::Divisor) divisor_vertices.insert(v);
        if (s->side == Side::Merged) {
            // The divisor part of a merged vertex must be a consumed gate.
            if (!consumed.contains(s->divisor_part)) return std::nullopt;
            merged_by_consumed_gate.emplace(s->divisor_part, v);
        }
        split.emplace(v, *s);
    }

    // 2. Matched consumed gates must form a rank prefix of every label class.
    std::map<Label, std::vector<Gate>> matched_by_label; // partner-rank order
    std::map<Label, bool> saw_unmatched;
    for (const auto& g : consumed) {
        const bool matched = merged_by_consumed_gate.count(g.node) != 0;
        if (matched) {
            if (saw_unmatched[g.label]) return std::nullopt;
            matched_by_label[g.label].push_back(g);
        } else {
            saw_unmatched[g.label] = true;
        }
    }

    // 3. Unmatched divisor vertices must appear in q verbatim, and nothing else
    // may be there on the divisor side.
    {
        std::set<NodeId> expected;
        for (const auto& v : divisor.graph().vertices()) {
            if (!merged_by_consumed_gate.count(v)) expected.insert(v);
        }
        if (expected != divisor_vertices) return std::nullopt;
    }

    // 4. Parse the q-interface led by the divisor's kept side: its head must
    // be the kept interface (with matched shared gates replaced by their
    // merged vertex), the tail are the factor's match-free gates.
    if (q_kept_side.size() < kept.size()) return std::nullopt;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const Gate& expect = kept[i];
        const Gate& got = q_kept_side[i];
        if (got.label != expect.label) return std::nullopt;
        auto rep = merged_by_consumed_gate.find(expect.node);
        const bool shared = consumed.contains(expect.node);
        const NodeId& want = (shared && rep != merged_by_consumed_gate.end()) ? rep->second : expect.node;
        if (got.node != want) return std::nullopt;
    }
    std::vector<Gate> factor_free; // match-free gates of the factor's consumed-facing side
    for (std::size_t i = kept.size(); i < q_kept_side.size(); ++i) {
        const Gate& g = q_kept_side[i];
        auto it = split.find(g.node);
        if (it == split.end() || it->second.side != Side::Factor) return std::nullopt;
        factor_free.push_back(g);
    }

    // 5. Parse the other q-interface: its tail must be the divisor's
    // match-free consumed gates, the head is the factor's far side with
    // matched shared gates replaced.
    std::vector<Gate> divisor_free;
    for (const auto& g : consumed) {
        if (!merged_by_consumed_gate.count(g.node)) divisor_free.push_back(g);
    }
    if (q_mixed_side.size() < divisor_free.size()) return std::nullopt;
    const std::size_t head_len = q_mixed_side.size() - divisor_free.size();
    for (std::size_t i = 0; i < divisor_free.size(); ++i) {
        if (q_mixed_side[head_len + i] != divisor_free[i]) return std::nullopt;
    }
    std::vector<Gate> factor_far; // the factor's far-side interface, un-replaced
    for (std::size_t i = 0; i < head_len; ++i) {
        const Gate& g = q_mixed_side[i];
        auto it = split.find(g.node);
        if (it == split.end()) return std::nullopt;
        if (it->second.side == Side::Factor) {
            factor_far.push_back(g);
        } else if (it->second.side == Side::Merged) {
            // a gate shared in the factor, matched during composition
            factor_far.push_back(Gate{it->second.factor_part, g.label});
        } else {
            return std::nullopt;
        }
    }

    // 6. Rebuild the factor's consumed-facing interface: per label class the
    // matched gates (in partner-rank order) precede the match-free ones;
    // label classes are emitted lexicographically (composition does not
    // record their interleaving).
    std::map<Label, std::vector<Gate>> factor_near_classes;
    for (const auto& [label, gates] : matched_by_label) {
        for (const auto& g : gates) {
            const auto& merged = merged_by_consumed_gate.at(g.node);
            factor_near_classes[label].push_back(Gate{split.at(merged).factor_part, label});
        }
    }
    for (const auto& g : factor_free) factor_near_classes[g.label].push_back(g);
    std::vector<Gate> factor_near;
    for (const auto& [label, gates] : factor_near_classes) {
        factor_near.insert(factor_near.end(), gates.begin(), gates.end());
    }

    // 7. Factor vertices: pure factor vertices plus un-merged match partners.
    std::set<NodeId> vertices;
    for (const auto& [v, s] : split) {
        if (s.side == Side::Factor) vertices.insert(v);
        if (s.side == Side::Merged) vertices.insert(s.factor_part);
    }

    // 8. Factor edges: q-edges not explained by the divisor's image, with
    // merged endpoints un-merged. An unexplained edge touching a pure divisor
    // vertex means q is not a composite of this divisor.
    std::set<Edge> divisor_image;
    for (const auto& e : divisor.graph().edges()) {
        const auto sub = [&](const NodeId& v) {
            auto it = merged_by_consumed_gate.find(v);
            return it == merged_by_consumed_gate.end() ? v : it->second;
        };
        divisor_image.insert(Edge(sub(e.src()), sub(e.dst()), e.directed()));
    }
    for (const auto& e : divisor_image) {
        if (!q.graph().edges().count(e)) return std::nullopt;
    }
    std::set<Edge> edges;
    for (const auto& e : q.graph().edges()) {
        if (divisor_image.count(e)) continue;
        const auto unmerge = [&](const NodeId& v) -> std::optional<NodeId> {
            auto it = split.find(v);
            if (it == split.end() || it->second.side == Side::Divisor) return std::nullopt;
            return it->second.side == Side::Factor ? v : it->second.factor_part;
        };
        const auto src = unmerge(e.src());
        const auto dst = unmerge(e.dst());
        if (!src || !dst) return std::nullopt;
        edges.insert(Edge(*src, *dst, e.directed()));
    }

    Module factor;
    try {
        Interface near(std::move(factor_near));
        Interface far(std::move(factor_far));
        factor = left_division
                     ? Module(Graph(std::move(vertices), std::move(edges)), std::move(near), std::move(far))
                     : Module(Graph(std::move(vertices), std::move(edges)), std::move(far), std::move(near));
    } catch (const InvalidModule&) {
        return std::nullopt;
    }

    // 9. The reconstruction is intricate; recomposition converts any subtle
    // mistake into a clean absence.
    try {
        const Module recomposed = left_division ? compose(divisor, factor).module
                                                : compose(factor, divisor).module;
        if (recomposed != q) return std::nullopt;
    } catch (const CalculusError&) {
        return std::nullopt;
    }
    return factor;
}

bool precedes(const Module& m, const Module& n) {
    const auto right_labels = m.right().labels();
    for (const auto& label : n.left().labels()) {
        if (right_labels.count(label)) return true;
    }
    return false;
}

} // namespace

std::optional<Module> left_quotient(const Module& q, const Module& k) {
    return divide(q, k, true);
}

std::optional<Module> right_quotient(const Module& q, const Module& n) {
    return divide(q, n, false);
}

std::optional<Module> levi_overlap(const Module& k, const Module& l,
                                   const Module& m, const Module& n) {
    if (!precedes(k, l)) {
        throw PreconditionViolated("levi_overlap: k does not precede l (no shared label)");
    }
    if (!precedes(m, n)) {
        throw PreconditionViolated("levi_overlap: m does not precede n (no shared label)");
    }
    const Module q1 = compose(k, l).module;
    const Module q2 = compose(m, n).module;
    if (q1 != q2) {
        throw PreconditionViolated("levi_overlap: k . l and m . n are different modules");
    }

    if (auto p = left_quotient(m, k)) {
        try {
            if (compose(*p, n).module == l) return p;
        } catch (const CalculusError&) {
        }
    }
    if (auto p = left_quotient(k, m)) {
        try {
            if (compose(*p, l).module == n) return p;
        } catch (const CalculusError&) {
        }
    }
    return std::nullopt;
}

} // namespace modcomp
