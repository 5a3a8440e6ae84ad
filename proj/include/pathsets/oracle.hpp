#pragma once

#include <set>
#include <vector>

#include "pathsets/path_set.hpp"

namespace pathsets {

/// Word-level reference semantics: the initial blocks of a language
/// truncated at a depth. Invariants: every block has length <= depth, the
/// set is prefix-closed, and every block of length < depth extends within
/// the set (path-set block sets are extendable, unlike arbitrary
/// prefix-closed languages). The empty language has an empty block set.
struct BlockSet {
    int depth = 0;
    std::set<WordBlock> blocks;

    friend bool operator==(const BlockSet& a, const BlockSet& b) {
        return a.depth == b.depth && a.blocks == b.blocks;
    }
};

/// Throws Error when the BlockSet invariants fail.
void check_block_set(const BlockSet& b);

/// Depth-bounded initial block set of p's path set, invariants verified.
BlockSet blocks_of(const Presentation& p, int depth);
BlockSet blocks_of(const PathSet& p, int depth);

/// Word-level decimation: positions j, j+n, ... of every full-length block,
/// truncated consistently to depth floor((b.depth - j) / n), prefix-closed.
BlockSet blocks_decimate(const BlockSet& b, int j, int n);

/// Word-level n-fold interleaving of equal-depth block sets; the result has
/// depth n * L. Throws DepthMismatchError when depths differ.
BlockSet blocks_interleave(const std::vector<BlockSet>& components);

/// Language equality by the (m1 + m2)-block criterion on right-resolving
/// presentations (inputs are normalized to right-resolving form first).
bool equals_blockwise(const Presentation& a, const Presentation& b);

} // namespace pathsets
