#include "modcomp/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace modcomp {

namespace {

struct VertexInfo {
    NodeId id;
    std::string color;
};

std::string base_multiset(const NodeId& v) {
    std::vector<std::string> bases;
    bases.reserve(v.members().size());
    for (const auto& p : v.members()) bases.push_back(base_prim(p));
    std::sort(bases.begin(), bases.end());
    std::string out;
    for (const auto& b : bases) {
        out += b;
        out += ',';
    }
    return out;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const Module& m) : module_(m) {
        for (const auto& v : m.graph().vertices()) {
            index_[v] = vertices_.size();
            vertices_.push_back(VertexInfo{v, {}});
        }
        for (const auto& e : m.graph().edges()) {
            const auto s = index_.at(e.src());
            const auto d = index_.at(e.dst());
            if (e.directed()) {
                adjacency_[s].emplace_back("o", d); // outgoing
                adjacency_[d].emplace_back("i", s); // incoming
            } else {
                adjacency_[s].emplace_back("u", d);
                if (s != d) adjacency_[d].emplace_back("u", s);
            }
        }
        assign_initial_colors();
    }

    std::string run() {
        refine();
        std::vector<std::size_t> order(vertices_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::string best;
        search(order, best);
        return best;
    }

private:
    void assign_initial_colors() {
        // Interface positions pin gate vertices; interior vertices start from
        // their base-name multiset.
        std::map<std::size_t, std::string> pins;
        for (std::size_t i = 0; i < module_.left().size(); ++i) {
            pins[index_.at(module_.left()[i].node)] += "L" + std::to_string(i) + ";";
        }
        for (std::size_t i = 0; i < module_.right().size(); ++i) {
            pins[index_.at(module_.right()[i].node)] += "R" + std::to_string(i) + ";";
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            auto it = pins.find(i);
            vertices_[i].color = base_multiset(vertices_[i].id) + "|" +
                                 (it == pins.end() ? std::string("int") : it->second);
        }
    }

    void refine() {
        for (;;) {
            std::vector<std::string> next(vertices_.size());
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                std::vector<std::string> signature;
                auto it = adjacency_.find(i);
                if (it != adjacency_.end()) {
                    for (const auto& [kind, j] : it->second) {
                        signature.push_back(kind + vertices_[j].color);
                    }
                }
                std::sort(signature.begin(), signature.end());
                std::string sig = vertices_[i].color + "/";
                for (const auto& s : signature) sig += s + "&";
                next[i] = std::move(sig);
            }
            // Compress to class indices to keep colors short.
            std::map<std::string, std::size_t> classes;
            for (const auto& s : next) classes.emplace(s, classes.size());
            bool changed = false;
            std::map<std::string, std::size_t> ranked;
            {
                std::size_t r = 0;
                for (auto& [s, unused] : classes) ranked[s] = r++;
            }
            std::vector<std::string> compressed(vertices_.size());
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                compressed[i] = next[i].substr(0, next[i].find('/')) + "#" +
                                std::to_string(ranked.at(next[i]));
            }
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                if (compressed[i] != vertices_[i].color) changed = true;
                vertices_[i].color = compressed[i];
            }
            if (!changed) break;
        }
    }

    // Individualize tied vertices and keep the lexicographically smallest
    // serialization. Tie classes are small in practice (they survive both the
    // interface pinning and the refinement).
    void search(std::vector<std::size_t>& order, std::string& best) {
        std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
            return vertices_[a].color < vertices_[b].color;
        });
        std::size_t tie_start = order.size();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (vertices_[order[i]].color == vertices_[order[i + 1]].color) {
                tie_start = i;
                break;
            }
        }
        if (tie_start == order.size()) {
            std::string key = serialize(order);
            if (best.empty() || key < best) best = std::move(key);
            return;
        }
        std::size_t tie_end = tie_start + 1;
        while (tie_end < order.size() &&
               vertices_[order[tie_end]].color == vertices_[order[tie_start]].color) {
            ++tie_end;
        }
        for (std::size_t pick = tie_start; pick < tie_end; ++pick) {
            Canonicalizer branch(*this);
            branch.vertices_[order[pick]].color += "!"; // individualize
            branch.refine();
            std::vector<std::size_t> next_order = order;
            branch.search(next_order, best);
        }
    }

    std::string serialize(const std::vector<std::size_t>& order) const {
        std::vector<std::size_t> position(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

        std::ostringstream out;
        out << "v:";
        for (std::size_t i : order) out << base_multiset(vertices_[i].id) << ";";
        std::vector<std::string> edges;
        for (const auto& e : module_.graph().edges()) {
            const auto s = position[index_.at(e.src())];
            const auto d = position[index_.at(e.dst())];
            std::ostringstream line;
            if (e.directed()) {
                line << s << ">" << d;
            } else {
                line << std::min(s, d) << "-" << std::max(s, d);
            }
            edges.push_back(line.str());
        }
        std::sort(edges.begin(), edges.end());
        out << "e:";
        for (const auto& e : edges) out << e << ";";
        out << "l:";
        for (const auto& g : module_.left()) {
            out << position[index_.at(g.node)] << ":" << g.label << ";";
        }
        out << "r:";
        for (const auto& g : module_.right()) {
            out << position[index_.at(g.node)] << ":" << g.label << ";";
        }
        return out.str();
    }

    const Module& module_;
    std::vector<VertexInfo> vertices_;
    std::map<NodeId, std::size_t> index_;
    std::map<std::size_t, std::vector<std::pair<std::string, std::size_t>>> adjacency_;
};

} // namespace

std::string canonical_key(const Module& m) { return Canonicalizer(m).run(); }

bool equal_modulo_freshening(const Module& m, const Module& n) {
    return canonical_key(m) == canonical_key(n);
}

} // namespace modcomp
