#include "modcomp/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "modcomp/canonical.hpp"
#include "modcomp/io.hpp"
#include "modcomp/oracles.hpp"
#include "modcomp/quotient.hpp"
#include "modcomp/words.hpp"

namespace modcomp {

namespace {

// A tuple-of-modules property: gen draws the witnesses for one trial, pred
// returns true when the law holds (vacuously true when a precondition of the
// trial construction broke, e.g. under shrinking).
struct TupleProperty {
    std::function<std::vector<Module>(std::uint64_t seed)> gen;
    std::function<bool(const std::vector<Module>&)> pred;
};

bool holds(const TupleProperty& p, const std::vector<Module>& tuple) {
    try {
        return p.pred(tuple);
    } catch (const CalculusError&) {
        return true; // the shrink step broke a precondition, not the law
    }
}

// Candidate one-step reductions of tuple[at]: drop an edge, drop an interior
// vertex with its edges, drop the last gate of the right then of the left
// interface. Each result is a valid module again.
std::vector<Module> reductions(const Module& m) {
    std::vector<Module> out;
    for (const auto& victim : m.graph().edges()) {
        std::set<Edge> edges = m.graph().edges();
        edges.erase(victim);
        out.emplace_back(Graph(m.graph().vertices(), std::move(edges)), m.left(), m.right());
    }
    for (const auto& victim : m.interior()) {
        std::set<NodeId> vertices = m.graph().vertices();
        vertices.erase(victim);
        std::set<Edge> edges;
        for (const auto& e : m.graph().edges()) {
            if (e.src() != victim && e.dst() != victim) edges.insert(e);
        }
        out.emplace_back(Graph(std::move(vertices), std::move(edges)), m.left(), m.right());
    }
    for (const Interface* side : {&m.right(), &m.left()}) {
        if (side->empty()) continue;
        std::vector<Gate> gates(side->begin(), side->end() - 1);
        Interface shorter((std::move(gates)));
        out.emplace_back(m.graph(), side == &m.left() ? shorter : m.left(),
                         side == &m.right() ? shorter : m.right());
    }
    return out;
}

std::vector<Module> shrink(std::vector<Module> tuple, const TupleProperty& p) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (std::size_t i = 0; i < tuple.size() && !reduced; ++i) {
            for (auto& candidate : reductions(tuple[i])) {
                std::vector<Module> variant = tuple;
                variant[i] = std::move(candidate);
                if (!holds(p, variant)) {
                    tuple = std::move(variant);
                    reduced = true;
                    break;
                }
            }
        }
    }
    return tuple;
}

std::string dump_tuple(const std::vector<Module>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        out += serialize(tuple[i], "witness" + std::to_string(i));
    }
    return out;
}

SuiteReport drive(std::string_view name, int trials, const GenConfig& cfg,
                  const std::function<TupleProperty(std::uint64_t)>& make) {
    SuiteReport report;
    report.suite = std::string(name);
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
        TupleProperty p = make(seed);
        std::vector<Module> tuple = p.gen(seed);
        if (holds(p, tuple)) continue;
        ++report.failures;
        if (report.failures == 1) {
            report.failing_seed = seed;
            report.counterexample = dump_tuple(shrink(std::move(tuple), p));
        }
    }
    return report;
}

GenConfig with_seed(GenConfig cfg, std::uint64_t seed) {
    cfg.seed = seed;
    return cfg;
}

GenConfig without_shared(GenConfig cfg) {
    cfg.shared_gate_probability = 0.0;
    return cfg;
}

// A fresh module over the given interface label sequences: new carriers in
// namespace `ns`, random interior and edges. No shared gates.
Module module_with_interfaces(std::mt19937_64& rng, const std::string& ns,
                              const std::vector<Label>& left_labels,
                              const std::vector<Label>& right_labels,
                              const GenConfig& cfg) {
    std::set<NodeId> vertices;
    std::vector<Gate> left, right;
    for (std::size_t i = 0; i < left_labels.size(); ++i) {
        NodeId node(ns + "l" + std::to_string(i));
        left.push_back(Gate{node, left_labels[i]});
        vertices.insert(std::move(node));
    }
    for (std::size_t i = 0; i < right_labels.size(); ++i) {
        NodeId node(ns + "r" + std::to_string(i));
        right.push_back(Gate{node, right_labels[i]});
        vertices.insert(std::move(node));
    }
    std::uniform_int_distribution<int> interior_count(0, cfg.max_interior);
    const int interiors = interior_count(rng);
    for (int i = 0; i < interiors; ++i) vertices.insert(NodeId(ns + "i" + std::to_string(i)));

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::set<Edge> edges;
    const std::vector<NodeId> ordered(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = i; j < ordered.size(); ++j) {
            if (coin(rng) >= cfg.edge_density) continue;
            if (coin(rng) < 0.5) {
                edges.insert(Edge::link(ordered[i], ordered[j]));
            } else if (i != j && coin(rng) < 0.5) {
                edges.insert(Edge::arrow(ordered[j], ordered[i]));
            } else {
                edges.insert(Edge::arrow(ordered[i], ordered[j]));
            }
        }
    }
    return Module(Graph(std::move(vertices), std::move(edges)),
                  Interface(std::move(left)), Interface(std::move(right)));
}

std::vector<Label> label_sequence(const Interface& side) {
    std::vector<Label> out;
    out.reserve(side.size());
    for (const auto& g : side) out.push_back(g.label);
    return out;
}

std::vector<Label> default_pool(const GenConfig& cfg, const std::string& prefix) {
    std::vector<Label> pool;
    for (int i = 0; i < cfg.label_alphabet_size; ++i) pool.push_back(prefix + std::to_string(i));
    return pool;
}

// ---------------------------------------------------------------------------
// The suites
// ---------------------------------------------------------------------------

TupleProperty suite_assoc(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            return std::vector<Module>{g.next(), g.next(), g.next()};
        },
        [](const std::vector<Module>& t) {
            const Module lhs = compose(compose(t[0], t[1]).module, t[2]).module;
            const Module rhs = compose(t[0], compose(t[1], t[2]).module).module;
            return lhs == rhs;
        }};
}

TupleProperty suite_cancel(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            const Module l = g.next();
            const Module m = g.next();
            Module n = g.next();
            for (int i = 0; i < 10 && n == m; ++i) n = g.next();
            return std::vector<Module>{l, m, n};
        },
        [](const std::vector<Module>& t) {
            const auto& [l, m, n] = std::tie(t[0], t[1], t[2]);
            if (m == n) return true;
            return compose(l, m).module != compose(l, n).module &&
                   compose(m, l).module != compose(n, l).module;
        }};
}

TupleProperty suite_commute(std::uint64_t seed, const GenConfig& cfg) {
    // Shared gates are out of scope for the commutativity criterion; pairs
    // alternate between label-disjoint pools (never entangled) and a common
    // pool steered toward entanglement.
    const GenConfig base = without_shared(cfg);
    const bool want_entangled = seed % 2 == 1;
    return TupleProperty{
        [base, want_entangled](std::uint64_t s) {
            ModuleGenerator g(with_seed(base, s));
            if (!want_entangled) {
                const Module m = g.next_with_labels(default_pool(base, "x"));
                const Module n = g.next_with_labels(default_pool(base, "y"));
                return std::vector<Module>{m, n};
            }
            const auto pool = default_pool(base, "l");
            const Module m = g.next_with_labels(pool);
            Module n = g.next_with_labels(pool);
            for (int i = 0; i < 200 && !is_entangled(m, n); ++i) n = g.next_with_labels(pool);
            return std::vector<Module>{m, n};
        },
        [](const std::vector<Module>& t) {
            const Module mn = compose(t[0], t[1]).module;
            const Module nm = compose(t[1], t[0]).module;
            if (is_entangled(t[0], t[1])) {
                return !equal_up_to_interleaving(mn, nm);
            }
            return equal_up_to_interleaving(mn, nm) && interface_equivalent(mn, nm);
        }};
}

TupleProperty suite_congruence(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            const Module m = g.next();
            const Module l = g.next();
            auto left_labels = label_sequence(m.left());
            auto right_labels = label_sequence(m.right());
            std::shuffle(left_labels.begin(), left_labels.end(), g.rng());
            std::shuffle(right_labels.begin(), right_labels.end(), g.rng());
            const Module n = module_with_interfaces(g.rng(), "q0.", left_labels, right_labels, cfg);
            return std::vector<Module>{m, n, l};
        },
        [](const std::vector<Module>& t) {
            const auto& [m, n, l] = std::tie(t[0], t[1], t[2]);
            if (!interface_equivalent(m, n)) return true;
            return interface_equivalent(compose(m, l).module, compose(n, l).module) &&
                   interface_equivalent(compose(l, m).module, compose(l, n).module);
        }};
}

TupleProperty suite_perfect(std::uint64_t seed, const GenConfig& cfg) {
    const bool shared_half = seed % 2 == 1;
    const GenConfig mcfg = shared_half ? cfg : without_shared(cfg);
    return TupleProperty{
        [mcfg, cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(mcfg, s));
            const Module m = g.next();
            auto partner_labels = label_sequence(m.right());
            std::shuffle(partner_labels.begin(), partner_labels.end(), g.rng());
            std::uniform_int_distribution<int> gate_count(0, cfg.max_gates_per_side);
            std::uniform_int_distribution<std::size_t> pick(0, std::max<std::size_t>(1, cfg.label_alphabet_size) - 1);
            std::vector<Label> far;
            const int n_far = gate_count(g.rng());
            const auto pool = default_pool(cfg, "l");
            for (int i = 0; i < n_far; ++i) far.push_back(pool[pick(g.rng())]);
            const Module n = module_with_interfaces(g.rng(), "q0.", partner_labels, far, cfg);
            return std::vector<Module>{m, n};
        },
        [](const std::vector<Module>& t) {
            const auto& [m, n] = std::tie(t[0], t[1]);
            if (!is_perfect_match(m, n)) return true;
            if (matches(m.right(), n.left()).size() != m.right().size()) return false;
            if (!matchfree(m.right(), n.left()).empty()) return false;
            if (!matchfree(n.left(), m.right()).empty()) return false;
            const Module mn = compose(m, n).module;
            if (!equivalent(mn.left(), m.left()) || !equivalent(mn.right(), n.right())) {
                return false;
            }
            if (!m.has_shared_gates() && !n.has_shared_gates()) {
                return mn.left() == m.left() && mn.right() == n.right();
            }
            return true;
        }};
}

TupleProperty suite_neutral(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) { return std::vector<Module>{gen_module(with_seed(cfg, s))}; },
        [](const std::vector<Module>& t) {
            return compose(t[0], neutral()).module == t[0] &&
                   compose(neutral(), t[0]).module == t[0];
        }};
}

// Whether the image of k's and p's edges under the match substitution of
// compose(k, p) overlaps; such pairs have non-unique factorizations.
bool quotient_edge_collision(const Module& k, const Module& p) {
    const auto ms = matches(k.right(), p.left());
    std::map<NodeId, NodeId> subst;
    for (const auto& m : ms) {
        const NodeId merged = merge_nodes(m.left.node, m.right.node);
        subst[m.left.node] = merged;
        subst[m.right.node] = merged;
    }
    const auto image = [&subst](const Graph& g) {
        std::set<Edge> out;
        for (const auto& e : g.edges()) {
            const auto at = [&subst](const NodeId& v) {
                auto it = subst.find(v);
                return it == subst.end() ? v : it->second;
            };
            out.insert(Edge(at(e.src()), at(e.dst()), e.directed()));
        }
        return out;
    };
    const auto ik = image(k.graph());
    for (const auto& e : image(p.graph())) {
        if (ik.count(e)) return true;
    }
    return false;
}

bool shares_label(const Interface& a, const Interface& b) {
    const auto la = a.labels();
    for (const auto& label : b.labels()) {
        if (la.count(label)) return true;
    }
    return false;
}

TupleProperty suite_levi(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            // Construct (k, p, n) with both precedences and a uniquely
            // factorizable k . p (canonical gate order, no edge collisions).
            ModuleGenerator g(with_seed(cfg, s));
            for (int attempt = 0; attempt < 500; ++attempt) {
                const Module k = g.next();
                const Module p = canonical_interface_order(g.next());
                const Module n = g.next();
                if (!shares_label(k.right(), p.left())) continue;
                if (!shares_label(p.right(), n.left())) continue;
                if (quotient_edge_collision(k, p)) continue;
                return std::vector<Module>{k, p, n};
            }
            return std::vector<Module>{}; // vacuous trial
        },
        [](const std::vector<Module>& t) {
            if (t.size() != 3) return true;
            const auto& [k, p, n] = std::tie(t[0], t[1], t[2]);
            if (p != canonical_interface_order(p)) return true;
            if (!shares_label(k.right(), p.left())) return true;
            if (!shares_label(p.right(), n.left())) return true;
            if (quotient_edge_collision(k, p)) return true;
            const Module m = compose(k, p).module;
            const Module l = compose(p, n).module;
            const auto overlap = levi_overlap(k, l, m, n);
            return overlap.has_value() && *overlap == p;
        }};
}

TupleProperty suite_atoms(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            const Module m = g.next();
            Module n = g.next();
            for (int i = 0; i < 10 && n == m; ++i) n = g.next();
            return std::vector<Module>{m, n};
        },
        [](const std::vector<Module>& t) {
            const auto& [m, n] = std::tie(t[0], t[1]);
            const Module am = atom_of(m);
            if (!is_atomic(am)) return false;
            if (am.left() != m.left() || am.right() != m.right()) return false;
            if (atom_of(am) != am) return false;
            if (m == n) return true; // identical atoms cannot compose
            const Module an = atom_of(n);
            const Module mn = compose(m, n).module;
            const Module atoms_composed = compose(am, an).module;
            const Module big_atom = atom_of(atoms_composed);
            const Module amn = atom_of(mn);
            if (big_atom.left() != amn.left() || big_atom.right() != amn.right()) return false;
            const Module am_n = compose(am, n).module;
            const Module m_an = compose(m, an).module;
            for (const Module* variant : {&atoms_composed, &am_n, &m_an}) {
                if (variant->left() != mn.left() || variant->right() != mn.right()) return false;
            }
            return true;
        }};
}

TupleProperty suite_abstractions(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            const Module m = g.next();
            const Module n = g.next();
            // shared-gate-free pair for the "abstract iff no match" clause
            ModuleGenerator g2(with_seed(without_shared(cfg), s ^ 0x5eedu));
            return std::vector<Module>{m, n, g2.next(), g2.next()};
        },
        [](const std::vector<Module>& t) {
            const auto& [m, n] = std::tie(t[0], t[1]);
            const Module bm = abstraction_of(m);
            if (!is_abstract(bm)) return false;
            if (abstraction_of(bm) != bm) return false;
            if (bm.left() != m.left() || bm.right() != m.right()) return false;
            const Module bn = abstraction_of(n);
            const Module mn = compose(m, n).module;
            const Module bm_n = compose(bm, n).module;
            const Module m_bn = compose(m, bn).module;
            const Module bm_bn = compose(bm, bn).module;
            for (const Module* variant : {&bm_n, &m_bn, &bm_bn}) {
                if (variant->left() != mn.left() || variant->right() != mn.right()) return false;
            }
            if (t.size() < 4) return true;
            const Module a = abstraction_of(t[2]);
            const Module b = abstraction_of(t[3]);
            if (a.has_shared_gates() || b.has_shared_gates()) return true;
            const bool no_match = matches(a.right(), b.left()).empty();
            return is_abstract(compose(a, b).module) == no_match;
        }};
}

TupleProperty suite_words(std::uint64_t seed, const GenConfig&) {
    return TupleProperty{
        [](std::uint64_t s) {
            std::mt19937_64 rng(s);
            const Alphabet sigma("abc");
            std::uniform_int_distribution<int> len(0, 4);
            std::uniform_int_distribution<int> at(0, 2);
            const auto word = [&] {
                std::string w;
                const int n = len(rng);
                for (int i = 0; i < n; ++i) w += sigma.symbols()[at(rng)];
                return w;
            };
            const std::string u = word(), v = word();
            // encode the words as modules; the predicate decodes them back
            return std::vector<Module>{word_to_module(u, sigma), word_to_module(v, sigma)};
        },
        [](const std::vector<Module>& t) {
            const std::string u = module_to_word(t[0]);
            const std::string v = module_to_word(t[1]);
            const Module uv =
                compose(freshen(t[0], "#u"), freshen(t[1], "#v")).module;
            if (module_to_word(uv) != u + v) return false;
            return equal_modulo_freshening(t[0], t[1]) == (u == v);
        }};
}

TupleProperty suite_sparsity(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator base(cfg); // the fixed generating set T
            std::vector<Module> t;
            for (int i = 0; i < 4; ++i) t.push_back(base.next());
            std::mt19937_64 rng(s);
            std::uniform_int_distribution<int> klen(1, 10);
            std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
            const int k = klen(rng);
            std::vector<Module> chain;
            for (int i = 0; i < k; ++i) chain.push_back(t[pick(rng)]);
            chain.insert(chain.begin(), t.begin(), t.end()); // first 4 = T itself
            return chain;
        },
        [](const std::vector<Module>& chain) {
            std::size_t max_v = 0, max_e = 0;
            for (std::size_t i = 0; i < 4 && i < chain.size(); ++i) {
                max_v = std::max(max_v, chain[i].graph().vertices().size());
                max_e = std::max(max_e, chain[i].graph().edges().size());
            }
            if (chain.size() <= 4) return true;
            Module folded = freshen(chain[4], "#f4");
            for (std::size_t i = 5; i < chain.size(); ++i) {
                folded = compose(folded, freshen(chain[i], "#f" + std::to_string(i))).module;
            }
            const std::size_t k = chain.size() - 4;
            return folded.graph().vertices().size() <= k * max_v &&
                   folded.graph().edges().size() <= k * max_e;
        }};
}

// Interfaces live inside throwaway abstract modules so the tuple machinery
// (and its shrinker) can handle this suite too: the witnesses are the left
// interfaces of three carrier modules.
TupleProperty suite_lemma1(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            const auto pool = default_pool(cfg, "l");
            const Interface a = g.next_interface(pool);
            auto shuffled = label_sequence(a);
            std::shuffle(shuffled.begin(), shuffled.end(), g.rng());
            std::vector<Gate> b_gates;
            for (std::size_t i = 0; i < shuffled.size(); ++i) {
                b_gates.push_back(Gate{NodeId("b.g" + std::to_string(i)), shuffled[i]});
            }
            const Interface b((std::move(b_gates)));
            const Interface c = g.next_interface(pool);
            const auto as_module = [](const Interface& side) {
                std::set<NodeId> vertices;
                for (const auto& gate : side) vertices.insert(gate.node);
                return Module(Graph(std::move(vertices), {}), side, Interface());
            };
            return std::vector<Module>{as_module(a), as_module(b), as_module(c)};
        },
        [](const std::vector<Module>& t) {
            const Interface& a = t[0].left();
            const Interface& b = t[1].left();
            const Interface& c = t[2].left();
            const auto phi = equivalent(a, b);
            if (!phi) return true;
            const auto partner_in = [](const Interface& side, const Gate& g,
                                       const Interface& other) -> std::optional<Gate> {
                for (const auto& m : matches(side, other)) {
                    if (m.left == g) return m.right;
                }
                return std::nullopt;
            };
            const auto free_in = [](const Interface& side, const Gate& g, const Interface& other) {
                const auto fr = matchfree(side, other);
                return std::find(fr.begin(), fr.end(), g) != fr.end();
            };
            for (const auto& g : a) {
                const Gate& image = phi->image(g);
                if (partner_in(a, g, c) != partner_in(b, image, c)) return false;
                if (free_in(a, g, c) != free_in(b, image, c)) return false;
            }
            return true;
        }};
}

TupleProperty suite_graph_oracle(std::uint64_t seed, const GenConfig& cfg) {
    return TupleProperty{
        [cfg](std::uint64_t s) {
            ModuleGenerator g(with_seed(cfg, s));
            return std::vector<Module>{g.next(), g.next()};
        },
        [](const std::vector<Module>& t) {
            const Graph& g = t[0].graph();
            const Interface& a = t[0].right();
            const Graph& h = t[1].graph();
            const Interface& b = t[1].left();
            const auto fast = compose_graphs(g, a, h, b);
            if (fast.graph != oracle_compose_graphs(g, a, h, b)) return false;
            if (fast.merged != oracle_matches(a, b)) return false;
            if (fast.free_left != oracle_matchfree(a, b)) return false;
            if (fast.free_right != oracle_matchfree(b, a)) return false;
            return true;
        }};
}

using SuiteFactory = TupleProperty (*)(std::uint64_t, const GenConfig&);

const std::map<std::string, SuiteFactory>& registry() {
    static const std::map<std::string, SuiteFactory> suites = {
        {"assoc", suite_assoc},         {"cancel", suite_cancel},
        {"commute", suite_commute},     {"congruence", suite_congruence},
        {"perfect", suite_perfect},     {"neutral", suite_neutral},
        {"levi", suite_levi},           {"atoms", suite_atoms},
        {"abstractions", suite_abstractions}, {"words", suite_words},
        {"sparsity", suite_sparsity},   {"lemma1", suite_lemma1},
        {"graph-oracle", suite_graph_oracle},
    };
    return suites;
}

} // namespace

std::string SuiteReport::summary() const {
    std::ostringstream out;
    out << "suite=" << suite << " trials=" << trials << " failures=" << failures;
    if (failures > 0) out << " failing_seed=" << failing_seed;
    return out.str();
}

SuiteReport run_suite(std::string_view name, int trials, const GenConfig& cfg) {
    cfg.validate();
    auto it = registry().find(std::string(name));
    if (it == registry().end()) {
        throw UnknownSuite("unknown suite '" + std::string(name) + "'");
    }
    const SuiteFactory factory = it->second;
    return drive(name, trials, cfg, [factory, &cfg](std::uint64_t seed) {
        return factory(seed, cfg);
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, f] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

} // namespace modcomp
