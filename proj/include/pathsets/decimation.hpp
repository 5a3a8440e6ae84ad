#pragma once

#include <utility>
#include <vector>

#include "pathsets/path_set.hpp"
#include "pathsets/profile.hpp"

namespace pathsets {

/// Index of the decimation psi_{j,n}: keep positions j, j+n, j+2n, ...
/// Principal when j < n; larger j are subsidiary decimations, reduced via
/// psi_{j,n} = psi_{0,n} o S^j.
struct DecimationIndex {
    int j; // >= 0
    int n; // >= 1
};

/// Square boolean relation on a presentation's vertex set, stored as bit
/// rows. Supports the relation products behind the decimation constructions.
class BoolRelation {
public:
    explicit BoolRelation(int m);
    static BoolRelation identity(int m);

    int size() const { return m_; }
    bool at(int i, int j) const;
    void set(int i, int j);
    /// Boolean matrix product this * other.
    BoolRelation compose(const BoolRelation& other) const;
    /// Row i as a sorted list of column indices.
    std::vector<int> row(int i) const;

    friend bool operator==(const BoolRelation& a, const BoolRelation& b) {
        return a.m_ == b.m_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const BoolRelation& a, const BoolRelation& b) {
        if (a.m_ != b.m_) return a.m_ < b.m_;
        return a.rows_ < b.rows_;
    }

private:
    int m_;
    int words_per_row_;
    std::vector<uint64_t> rows_;
};

/// Powers of the one-step unlabeled reachability relation U of a path set,
/// up to the first repeat: U^0, ..., U^(first_repeat+period-1) are pairwise
/// distinct and U^(first_repeat+period) = U^(first_repeat). Certifies the
/// terminating enumeration of the full decimation set, since psi_{j,n}(P) is
/// determined by (initial row of U^j, U^(n-1)).
struct RelationPowerTable {
    std::vector<BoolRelation> powers; // U^0 .. U^(first_repeat+period-1)
    int first_repeat;                 // index i0 with U^(i0+period) = U^(i0)
    int period;                       // >= 1

    /// Representative t' < powers.size() with U^(t') = U^t.
    int representative(long long t) const {
        if (t < static_cast<long long>(powers.size())) return static_cast<int>(t);
        long long cyc = (t - first_repeat) % period;
        return first_repeat + static_cast<int>(cyc);
    }
};

/// The pre-minimization shift construction: p's graph plus one fresh initial
/// vertex whose out-edges copy every edge leaving a vertex reachable in
/// exactly j steps. Exposed so size bounds (m + 1 vertices) can be checked.
Presentation shift_presentation(const PathSet& p, int j);

/// S^j P. shift(p, 0) = p; empty input gives empty output.
PathSet shift(const PathSet& p, int j);

/// psi_{j,n}(P) by the modified n-th higher-power construction: on p's
/// vertex set, an edge u -> w labeled b exists iff some length-n path from u
/// to w carries b at offset j; then restrict to the reachable part,
/// determinize, minimize. For j >= n reduces via psi_{0,n}(S^j P). The
/// minimized result has at most 2^(m+1) - 1 vertices.
PathSet decimate(const PathSet& p, DecimationIndex idx);

/// Lexicographically smallest pair j < k with S^j P = S^k P; exists by weak
/// shift-invariance. Throws EmptyPathSetError on the empty set.
std::pair<int, int> weak_shift_orbit(const PathSet& p);

/// Per-position alphabets A_k = labels leaving the set of vertices reachable
/// in exactly k steps, folded into an eventually periodic profile at the
/// first repeat of the reachable-set sequence. Throws EmptyPathSetError.
LeveledProfile position_alphabets(const PathSet& p);

/// The n-kernel Ker_n(P) = { psi_{j,n^k}(P) : j >= 0, k >= 0 }, computed as
/// the closure of {p} under shift(., 1) and decimate(., (0, n)).
std::vector<PathSet> kernel(const PathSet& p, int n);

/// The power table for p's one-step relation. Throws EmptyPathSetError.
RelationPowerTable relation_power_table(const PathSet& p);

/// One enumerated member of the full decimation set together with the
/// representative index at which it was constructed.
struct CertifiedDecimation {
    PathSet value;
    DecimationIndex index;
};

struct FullDecimationSet {
    std::vector<PathSet> members; // sorted, deduplicated
    std::vector<CertifiedDecimation> certificates;
    RelationPowerTable table;
};

/// The full decimation set D(P) = { psi_{j,n}(P) : j >= 0, n >= 1 } with a
/// completeness certificate: every (j, n) reduces to a representative pair
/// (row of U^j, U^(n-1)) drawn from the power table, and all such pairs are
/// enumerated. Throws EmptyPathSetError.
FullDecimationSet full_decimation_set_certified(const PathSet& p);
std::vector<PathSet> full_decimation_set(const PathSet& p);

} // namespace pathsets
