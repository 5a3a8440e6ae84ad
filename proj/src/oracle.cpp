#include "pathsets/oracle.hpp"

#include <algorithm>

#include "pathsets/errors.hpp"

namespace pathsets {

void check_block_set(const BlockSet& b) {
    if (b.depth < 0) throw Error("BlockSet: negative depth");
    for (const WordBlock& w : b.blocks) {
        if (static_cast<int>(w.size()) > b.depth)
            throw Error("BlockSet: block longer than depth");
        if (!w.empty()) {
            WordBlock prefix(w.begin(), w.end() - 1);
            if (!b.blocks.count(prefix)) throw Error("BlockSet: not prefix-closed");
        }
        if (static_cast<int>(w.size()) < b.depth) {
            // Extendability: some one-letter extension must be present.
            auto it = b.blocks.upper_bound(w);
            bool extendable = it != b.blocks.end() && it->size() == w.size() + 1 &&
                              std::equal(w.begin(), w.end(), it->begin());
            if (!extendable) throw Error("BlockSet: block not extendable to depth");
        }
    }
}

BlockSet blocks_of(const Presentation& p, int depth) {
    BlockSet b;
    b.depth = depth;
    b.blocks = initial_blocks(p, depth);
    check_block_set(b);
    return b;
}

BlockSet blocks_of(const PathSet& p, int depth) {
    return blocks_of(p.presentation(), depth);
}

BlockSet blocks_decimate(const BlockSet& b, int j, int n) {
    if (n < 1) throw Error("blocks_decimate: n must be positive");
    if (j < 0) throw Error("blocks_decimate: j must be nonnegative");
    BlockSet out;
    // Positions j, j+n, ... strictly below b.depth survive the extraction.
    out.depth = b.depth > j ? (b.depth - 1 - j) / n + 1 : 0;
    if (b.blocks.empty()) return out;
    for (const WordBlock& w : b.blocks) {
        if (static_cast<int>(w.size()) != b.depth) continue;
        WordBlock extracted;
        for (int i = 0; i < out.depth; ++i)
            extracted.push_back(w[static_cast<size_t>(j + i * n)]);
        for (size_t len = 0; len <= extracted.size(); ++len)
            out.blocks.insert(WordBlock(extracted.begin(), extracted.begin() + static_cast<long>(len)));
    }
    // A depth-0 truncation of a nonempty language still contains the empty
    // word; full-length blocks exist by extendability, so the loop above
    // inserted it already unless depth was 0 overall.
    if (out.blocks.empty() && !b.blocks.empty()) out.blocks.insert(WordBlock{});
    check_block_set(out);
    return out;
}

BlockSet blocks_interleave(const std::vector<BlockSet>& components) {
    if (components.empty()) throw Error("blocks_interleave: no components");
    const int L = components.front().depth;
    for (const BlockSet& c : components)
        if (c.depth != L)
            throw DepthMismatchError("component depths " + std::to_string(L) + " vs " +
                                     std::to_string(c.depth));
    const int n = static_cast<int>(components.size());
    BlockSet out;
    out.depth = n * L;
    // Full-length blocks per component; any empty component empties the result.
    std::vector<std::vector<WordBlock>> full(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (const WordBlock& w : components[static_cast<size_t>(k)].blocks)
            if (static_cast<int>(w.size()) == L) full[static_cast<size_t>(k)].push_back(w);
        if (full[static_cast<size_t>(k)].empty()) return out;
    }
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    for (;;) {
        WordBlock merged(static_cast<size_t>(n * L));
        for (int k = 0; k < n; ++k) {
            const WordBlock& w = full[static_cast<size_t>(k)][pick[static_cast<size_t>(k)]];
            for (int i = 0; i < L; ++i)
                merged[static_cast<size_t>(i * n + k)] = w[static_cast<size_t>(i)];
        }
        for (size_t len = 0; len <= merged.size(); ++len)
            out.blocks.insert(WordBlock(merged.begin(), merged.begin() + static_cast<long>(len)));
        int k = n - 1;
        while (k >= 0 && ++pick[static_cast<size_t>(k)] == full[static_cast<size_t>(k)].size()) {
            pick[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    check_block_set(out);
    return out;
}

bool equals_blockwise(const Presentation& a, const Presentation& b) {
    Presentation qa = restrict_reachable(prune(a));
    Presentation qb = restrict_reachable(prune(b));
    if (!qa.is_right_resolving()) qa = determinize(qa);
    if (!qb.is_right_resolving()) qb = determinize(qb);
    const int depth = qa.vertex_count() + qb.vertex_count();
    return blocks_of(qa, depth).blocks == blocks_of(qb, depth).blocks;
}

} // namespace pathsets
