#ifndef MODCOMP_SUITES_HPP
#define MODCOMP_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modcomp/random.hpp"

namespace modcomp {

/// Outcome of one property suite run. Deterministic given (suite, trials,
/// cfg): per-trial seeds are cfg.seed + trial, so a failure reproduces by
/// rerunning with seed = failing_seed and trials = 1.
struct SuiteReport {
    std::string suite;
    int trials = 0;
    int failures = 0;
    std::uint64_t failing_seed = 0; // first failing trial's seed
    std::string counterexample;     // shrunk witness, serialized

    bool passed() const { return failures == 0; }
    std::string summary() const;
};

/// Runs `trials` randomized checks of the named law. Suite names:
/// assoc, cancel, commute, congruence, perfect, neutral, levi, atoms,
/// abstractions, words, sparsity, lemma1, graph-oracle.
/// Throws UnknownSuite for anything else.
SuiteReport run_suite(std::string_view name, int trials, const GenConfig& cfg);

const std::vector<std::string>& suite_names();

} // namespace modcomp

#endif // MODCOMP_SUITES_HPP
