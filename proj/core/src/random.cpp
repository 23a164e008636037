#include "modcomp/random.hpp"

#include <algorithm>
#include <string>

namespace modcomp {

void GenConfig::validate() const {
    if (max_interior < 0 || max_gates_per_side < 0 || label_alphabet_size < 1) {
        throw PreconditionViolated("GenConfig: bounds must be non-negative (alphabet >= 1)");
    }
    for (double p : {shared_gate_probability, edge_density}) {
        if (p < 0.0 || p > 1.0) {
            throw PreconditionViolated("GenConfig: probabilities must lie in [0, 1]");
        }
    }
}

ModuleGenerator::ModuleGenerator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
}

Module ModuleGenerator::next() {
    std::vector<Label> pool;
    pool.reserve(cfg_.label_alphabet_size);
    for (int i = 0; i < cfg_.label_alphabet_size; ++i) pool.push_back("l" + std::to_string(i));
    return next_with_labels(pool);
}

Module ModuleGenerator::next_with_labels(const std::vector<Label>& pool) {
    const std::string ns = "m" + std::to_string(draw_++) + ".";
    std::uniform_int_distribution<int> interior_count(0, cfg_.max_interior);
    std::uniform_int_distribution<int> gate_count(0, cfg_.max_gates_per_side);
    std::uniform_int_distribution<std::size_t> label_at(0, pool.size() - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::set<NodeId> vertices;
    const int interiors = interior_count(rng_);
    for (int i = 0; i < interiors; ++i) {
        vertices.insert(NodeId(ns + "i" + std::to_string(i)));
    }

    std::vector<Gate> left;
    const int n_left = gate_count(rng_);
    for (int i = 0; i < n_left; ++i) {
        const NodeId node(ns + "l" + std::to_string(i));
        left.push_back(Gate{node, pool[label_at(rng_)]});
        vertices.insert(node);
    }

    std::vector<Gate> right;
    std::vector<std::size_t> unshared; // indices into `left` still available
    for (std::size_t i = 0; i < left.size(); ++i) unshared.push_back(i);
    const int n_right = gate_count(rng_);
    for (int i = 0; i < n_right; ++i) {
        const bool share = coin(rng_) < cfg_.shared_gate_probability && !unshared.empty();
        if (share) {
            std::uniform_int_distribution<std::size_t> pick(0, unshared.size() - 1);
            const std::size_t at = pick(rng_);
            right.push_back(left[unshared[at]]); // same node, same label
            unshared.erase(unshared.begin() + at);
        } else {
            const NodeId node(ns + "r" + std::to_string(i));
            right.push_back(Gate{node, pool[label_at(rng_)]});
            vertices.insert(node);
        }
    }

    std::set<Edge> edges;
    const std::vector<NodeId> ordered(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = i; j < ordered.size(); ++j) {
            if (coin(rng_) >= cfg_.edge_density) continue;
            const bool directed = coin(rng_) < 0.5;
            if (directed && i != j && coin(rng_) < 0.5) {
                edges.insert(Edge::arrow(ordered[j], ordered[i]));
            } else if (directed) {
                edges.insert(Edge::arrow(ordered[i], ordered[j]));
            } else {
                edges.insert(Edge::link(ordered[i], ordered[j]));
            }
        }
    }

    return Module(Graph(std::move(vertices), std::move(edges)),
                  Interface(std::move(left)), Interface(std::move(right)));
}

Interface ModuleGenerator::next_interface(const std::vector<Label>& pool) {
    const std::string ns = "m" + std::to_string(draw_++) + ".";
    std::uniform_int_distribution<int> gate_count(0, 2 * cfg_.max_gates_per_side);
    std::uniform_int_distribution<std::size_t> label_at(0, pool.size() - 1);
    std::vector<Gate> gates;
    const int n = gate_count(rng_);
    for (int i = 0; i < n; ++i) {
        gates.push_back(Gate{NodeId(ns + "g" + std::to_string(i)), pool[label_at(rng_)]});
    }
    return Interface(std::move(gates));
}

Module gen_module(const GenConfig& cfg) {
    ModuleGenerator gen(cfg);
    return gen.next();
}

} // namespace modcomp
