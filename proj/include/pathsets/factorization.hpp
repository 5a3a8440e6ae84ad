#pragma once

#include <optional>
#include <vector>

#include "pathsets/interleaving.hpp"
#include "pathsets/path_set.hpp"
#include "pathsets/profile.hpp"

namespace pathsets {

/// Node of a complete iterated interleaving factorization. Leaves are
/// frozen leveled path sets (factorizable at every level, so expansion would
/// not terminate) or indecomposable path sets; internal nodes record the
/// level n at which their children interleave back to the node's value.
struct FactorizationTree {
    enum class Status { FrozenLeveled, Indecomposable, Factored };

    Status status;
    PathSet value;
    std::optional<LeveledProfile> profile; // FrozenLeveled only
    int n = 0;                             // Factored only, n >= 2
    std::vector<FactorizationTree> children;

    int depth() const;
    int leaf_count() const;
};

/// A certificate that p is not n-factorizable for any n >= k + l + 1: a
/// block of length l + 1 drawn from the per-position alphabets
/// A_k, ..., A_{k+l} that no word of p realizes starting at position k.
struct MissingConfiguration {
    int k;           // >= 0
    int l;           // >= 1
    WordBlock block; // length l + 1, block[i] in A_{k+i}
};

/// True iff every vertex of the minimal presentation sends all its
/// out-edges to one target; fills the profile of the unique vertex walk when
/// so. Decides infinite factorizability. Throws EmptyPathSetError.
bool is_leveled(const PathSet& p, LeveledProfile* profile = nullptr);

/// The smallest leveled path set containing p: the product of p's
/// per-position alphabets, built as a rho-shaped presentation and minimized.
/// p is infinitely factorizable iff equals(p, leveled_envelope(p)).
PathSet leveled_envelope(const PathSet& p);

/// Dichotomy: either p factors at every level (infinite) or the factorizable
/// levels are exactly the divisors of one integer f <= m - 1.
struct FactorizationExponent {
    bool infinite;
    int f; // meaningful iff !infinite; f >= 1

    friend bool operator==(const FactorizationExponent& a, const FactorizationExponent& b) {
        return a.infinite == b.infinite && (a.infinite || a.f == b.f);
    }
};

FactorizationExponent factorization_exponent(const PathSet& p);

/// All path sets occurring as interleaving factors of p in any
/// factorization. For leveled p this is { psi_{j,n}(p) : j < n <= 2m - 1 }
/// (complete by the 2m - 1 bound, which is sharp); it has at most m^2
/// members. For non-leveled p it is the union of the factor lists over the
/// factorizable levels. Throws EmptyPathSetError.
std::vector<PathSet> factor_set(const PathSet& p);

/// Recursive complete factorization: leveled nodes freeze, otherwise the
/// smallest factorizable n in [2, m-1] splits the node, and nodes with no
/// such n are indecomposable. Terminates because factors of finitely
/// factorizable sets have fewer vertices. Depth <= m - 1 and leaf count
/// <= (m-1)!. Throws EmptyPathSetError.
FactorizationTree complete_factorization(const PathSet& p);

/// True iff the minimal presentation has a self-loop at the initial vertex;
/// then every factorization of p is a self-interleaving (all factors equal).
bool self_loop_criterion(const PathSet& p);

/// The smallest missing configuration under the order (k+l, k, lex block),
/// or nullopt iff p is leveled. Throws EmptyPathSetError.
std::optional<MissingConfiguration> missing_configuration(const PathSet& p);

} // namespace pathsets
