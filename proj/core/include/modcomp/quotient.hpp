#ifndef MODCOMP_QUOTIENT_HPP
#define MODCOMP_QUOTIENT_HPP

#include <optional>

#include "modcomp/module.hpp"

namespace modcomp {

/// The factor p with compose(k, p).module == q, when k is a left factor of q;
/// absent otherwise.
///
/// Reconstruction: q-vertices whose primitive ids are not all from k become
/// p's vertices, with merged match vertices un-merged into their gate pairs;
/// p's interfaces are rebuilt from q's interfaces and k's match-free
/// bookkeeping. Gate positions that composition does not record (the
/// interleaving of matched gates across label classes) are emitted in
/// label-lexicographic order. The candidate is verified by recomposition
/// before it is returned, so a present result is always a genuine factor.
std::optional<Module> left_quotient(const Module& q, const Module& k);

/// The factor p with compose(p, n).module == q; mirror of left_quotient.
std::optional<Module> right_quotient(const Module& q, const Module& n);

/// The overlap module p of two factorizations k . l = m . n of the same
/// module, where k precedes l and m precedes n: either k . p = m and
/// p . n = l, or m . p = k and p . l = n. Both equations of the chosen
/// clause are verified before returning; absent when neither clause can be
/// realized.
///
/// Throws PreconditionViolated when the two compositions differ or a
/// precedence assumption fails.
std::optional<Module> levi_overlap(const Module& k, const Module& l,
                                   const Module& m, const Module& n);

} // namespace modcomp

#endif // MODCOMP_QUOTIENT_HPP
