#ifndef MODCOMP_RANDOM_HPP
#define MODCOMP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "modcomp/module.hpp"

namespace modcomp {

/// Knobs for the seeded random module generator.
struct GenConfig {
    std::uint64_t seed = 0;
    int max_interior = 4;
    int max_gates_per_side = 3;
    int label_alphabet_size = 3;
    double shared_gate_probability = 0.15;
    double edge_density = 0.25;

    /// Throws PreconditionViolated on negative bounds or out-of-range
    /// probabilities.
    void validate() const;
};

/// Deterministic module source: equal seeds yield equal draw sequences, and
/// primitive ids are namespaced by draw index, so successive draws are
/// carrier-disjoint.
class ModuleGenerator {
public:
    explicit ModuleGenerator(GenConfig cfg);

    /// Labels are "l0".."l<k-1>" with k = label_alphabet_size.
    Module next();

    /// Same draw with an explicit label pool (used to steer entanglement).
    Module next_with_labels(const std::vector<Label>& pool);

    /// A random interface over fresh carriers (for interface-level suites).
    Interface next_interface(const std::vector<Label>& pool);

    std::mt19937_64& rng() { return rng_; }
    const GenConfig& config() const { return cfg_; }

private:
    GenConfig cfg_;
    std::mt19937_64 rng_;
    int draw_ = 0;
};

/// First draw of a fresh generator with this configuration.
Module gen_module(const GenConfig& cfg);

} // namespace modcomp

#endif // MODCOMP_RANDOM_HPP
