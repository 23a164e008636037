#ifndef MODCOMP_ORACLES_HPP
#define MODCOMP_ORACLES_HPP

#include <vector>

#include "modcomp/graph.hpp"

namespace modcomp {

// Reference transcriptions used only for verification (the graph-oracle and
// interface-oracle suites and the unit tests). They deliberately follow the
// defining clauses word for word and share no code with the production
// implementations they check.

/// Brute force over all gate pairs: {a, b} is a match when both carry the
/// same label and the number of equally labeled gates before a equals the
/// number before b, counted by scanning.
std::vector<Match> oracle_matches(const Interface& a, const Interface& b);

/// Gates of a that occur in no oracle match with b, by scanning.
std::vector<Gate> oracle_matchfree(const Interface& a, const Interface& b);

/// Clause-by-clause composition of two graphs along two interfaces: the node
/// set is assembled from the four unions, each edge endpoint is classified
/// as match-free or matched by searching the match set.
Graph oracle_compose_graphs(const Graph& g, const Interface& a,
                            const Graph& h, const Interface& b);

} // namespace modcomp

#endif // MODCOMP_ORACLES_HPP
