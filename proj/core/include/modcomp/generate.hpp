#ifndef MODCOMP_GENERATE_HPP
#define MODCOMP_GENERATE_HPP

#include <vector>

#include "modcomp/module.hpp"

namespace modcomp {

/// The closure of `basis` under composition, truncated to modules with at
/// most `max_vertices` vertices (the untruncated closure is infinite).
///
/// Operands are freshened before every composition, so carrier collisions
/// never occur; results are deduplicated up to interface equivalence plus
/// structural graph equality modulo freshening-tag renaming. The result is
/// sorted by canonical key, so it is deterministic.
///
/// Throws PreconditionViolated when max_vertices < 1.
std::vector<Module> generate(const std::vector<Module>& basis, int max_vertices);

} // namespace modcomp

#endif // MODCOMP_GENERATE_HPP
