#pragma once

#include <vector>

#include "pathsets/decimation.hpp"
#include "pathsets/path_set.hpp"

namespace pathsets {

/// The n-fold interleaving pointed graph product, restricted to its
/// reachable part. States are phase-tagged rotated tuples: a phase-i state
/// (u_i, u_{i+1}, ..., u_{i-1}) advances component i by one labeled edge and
/// rotates. The reachable part has at most n * prod(k_i) vertices;
/// right-resolving and pruned inputs give a right-resolving / pruned output.
/// Any empty component makes the product empty.
Presentation interleave_product(const std::vector<Presentation>& components);

/// The n-fold interleaving of path sets: minimize(interleave_product(...)).
/// Alphabets are unified by symbol name.
PathSet interleave(const std::vector<PathSet>& components);

/// The n-fold interleaving closure P^[n]: the interleaving of the n
/// principal decimations of p. Contains p and is idempotent.
PathSet interleaving_closure(const PathSet& p, int n);

/// P is n-factorizable iff P equals its n-fold interleaving closure.
bool is_n_factorizable(const PathSet& p, int n);

/// The unique factor list [psi_{0,n}(P), ..., psi_{n-1,n}(P)].
/// Throws NotFactorizableError(n) when is_n_factorizable(p, n) fails.
std::vector<PathSet> interleaving_factors(const PathSet& p, int n);

} // namespace pathsets
