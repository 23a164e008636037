#ifndef MODCOMP_CANONICAL_HPP
#define MODCOMP_CANONICAL_HPP

#include <string>

#include "modcomp/module.hpp"

namespace modcomp {

/// A canonical fingerprint of a module that is invariant under freshening:
/// two modules have equal keys iff some vertex bijection maps one onto the
/// other preserving edges, interface sequences, and the multiset of base
/// names (tag-stripped primitive ids) of every vertex.
///
/// Interface gates are pinned by their sequence positions; interior vertices
/// are ordered by iterative refinement with backtracking on ties, so the key
/// is deterministic.
std::string canonical_key(const Module& m);

/// canonical_key(m) == canonical_key(n).
bool equal_modulo_freshening(const Module& m, const Module& n);

} // namespace modcomp

#endif // MODCOMP_CANONICAL_HPP
