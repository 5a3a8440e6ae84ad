#pragma once

#include <set>
#include <string>
#include <vector>

#include "pathsets/presentation.hpp"

namespace pathsets {

/// A path set in canonical form: the minimal right-resolving presentation
/// (pruned, reachable, follower-separated), with vertices numbered in
/// breadth-first order from the initial vertex exploring out-edges in
/// alphabet order. Two PathSet values denote the same language iff they are
/// structurally identical, which is what equals() checks.
class PathSet {
public:
    /// The empty path set over the given alphabet.
    static PathSet empty(Alphabet alphabet);

    const Presentation& presentation() const { return pres_; }
    const Alphabet& alphabet() const { return pres_.alphabet(); }
    bool is_empty() const { return pres_.is_empty(); }
    int vertex_count() const { return pres_.vertex_count(); }

    /// Deterministic transition from the canonical presentation; -1 if the
    /// symbol is not enabled.
    int step(int v, Symbol a) const { return pres_.step(v, a); }

private:
    explicit PathSet(Presentation pres) : pres_(std::move(pres)) {}
    friend PathSet minimize(const Presentation& p);

    Presentation pres_;
};

/// Removes out-degree-0 vertices until none remain. May remove the initial
/// vertex, yielding the empty presentation.
Presentation prune(const Presentation& p);

/// Induced subgraph on vertices reachable from the initial vertex.
Presentation restrict_reachable(const Presentation& p);

/// Subset construction. Input must be pruned and reachable; the result is a
/// right-resolving presentation of the same path set whose states are the
/// nonempty reachable subsets, at most 2^m - 1 of them. Subset states are
/// named by their sorted member lists.
Presentation determinize(const Presentation& p);

/// Full normalization pipeline: prune, restrict to the reachable part,
/// determinize, merge follower-equivalent vertices by coarsest partition
/// refinement, and renumber canonically.
PathSet minimize(const Presentation& p);

/// Structural identity after alphabet unification by symbol name; decides
/// language equality by uniqueness of the minimal presentation.
bool equals(const PathSet& a, const PathSet& b);

/// Re-embeds p over the given alphabet (which must contain every symbol name
/// p uses) and recanonicalizes. Used by binary operations to unify operands.
PathSet reembed(const PathSet& p, const Alphabet& unified);

/// Label sequences of all paths of length <= depth from the initial vertex
/// that lie on infinite paths — equivalently the initial blocks of the
/// denoted path set, including the empty word when the language is nonempty.
/// The empty language has no blocks at all.
std::set<WordBlock> initial_blocks(const Presentation& p, int depth);
std::set<WordBlock> initial_blocks(const PathSet& p, int depth);

/// Language intersection via the synchronized product, then minimize.
PathSet intersection(const PathSet& a, const PathSet& b);

/// Language union: disjoint union plus a fresh initial vertex duplicating
/// both initial vertices' out-edges, then minimize.
PathSet union_sets(const PathSet& a, const PathSet& b);

/// The residual language P^w: follow w from the initial vertex and root the
/// path set there; empty when w is not an initial block.
PathSet word_path_set(const PathSet& p, const WordBlock& w);

/// Stable total order on canonical path sets over one alphabet (vertex
/// count, then edge triples, then emptiness). Used for deterministic listing
/// of path-set collections.
bool canonical_less(const PathSet& a, const PathSet& b);

/// Deduplicates and sorts a collection of path sets by canonical_less.
std::vector<PathSet> sorted_unique(std::vector<PathSet> sets);

} // namespace pathsets
