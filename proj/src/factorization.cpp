#include "pathsets/factorization.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pathsets/decimation.hpp"
#include "pathsets/errors.hpp"
#include "pathsets/interleaving.hpp"

namespace pathsets {

int FactorizationTree::depth() const {
    int best = 0;
    for (const FactorizationTree& child : children) best = std::max(best, 1 + child.depth());
    return best;
}

int FactorizationTree::leaf_count() const {
    if (children.empty()) return 1;
    int total = 0;
    for (const FactorizationTree& child : children) total += child.leaf_count();
    return total;
}

bool is_leveled(const PathSet& p, LeveledProfile* profile) {
    if (p.is_empty()) throw EmptyPathSetError("is_leveled");
    const Presentation& g = p.presentation();
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto out = g.out_edges(v);
        for (const Edge& e : out)
            if (e.dst != out.front().dst) return false;
    }
    if (profile) *profile = position_alphabets(p);
    return true;
}

PathSet leveled_envelope(const PathSet& p) {
    LeveledProfile prof = position_alphabets(p);
    const int s = static_cast<int>(prof.preperiod.size());
    const int per = static_cast<int>(prof.period.size());
    const int m = s + per;
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) names.push_back("c" + std::to_string(k));
    std::vector<Edge> edges;
    for (int k = 0; k < m; ++k) {
        int next = (k + 1 < m) ? k + 1 : s;
        for (Symbol a : prof.at(static_cast<size_t>(k))) edges.push_back(Edge{k, a, next});
    }
    Presentation raw(p.alphabet(), std::move(names), std::move(edges), 0);
    return minimize(raw);
}

FactorizationExponent factorization_exponent(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("factorization_exponent");
    if (is_leveled(p)) return FactorizationExponent{true, 0};
    const int m = p.vertex_count();
    std::vector<int> factorizable{1};
    for (int n = 2; n <= m - 1; ++n)
        if (is_n_factorizable(p, n)) factorizable.push_back(n);
    int f = factorizable.back();
    for (int n : factorizable)
        if (f % n != 0) throw Error("factorization_exponent: factorizable set is not divisor-closed");
    return FactorizationExponent{false, f};
}

std::vector<PathSet> factor_set(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("factor_set");
    std::vector<PathSet> out;
    if (is_leveled(p)) {
        const int m = p.vertex_count();
        for (int n = 1; n <= 2 * m - 1; ++n)
            for (int j = 0; j < n; ++j) out.push_back(decimate(p, DecimationIndex{j, n}));
        out = sorted_unique(std::move(out));
        if (static_cast<int>(out.size()) > m * m)
            throw Error("factor_set: leveled factor set exceeds m^2 members");
        return out;
    }
    const int m = p.vertex_count();
    out.push_back(p);
    for (int n = 2; n <= m - 1; ++n) {
        if (!is_n_factorizable(p, n)) continue;
        for (PathSet& f : interleaving_factors(p, n)) out.push_back(std::move(f));
    }
    return sorted_unique(std::move(out));
}

FactorizationTree complete_factorization(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("complete_factorization");
    LeveledProfile prof;
    if (is_leveled(p, &prof))
        return FactorizationTree{FactorizationTree::Status::FrozenLeveled, p, std::move(prof), 0, {}};
    const int m = p.vertex_count();
    for (int n = 2; n <= m - 1; ++n) {
        if (!is_n_factorizable(p, n)) continue;
        FactorizationTree node{FactorizationTree::Status::Factored, p, std::nullopt, n, {}};
        for (const PathSet& f : interleaving_factors(p, n)) node.children.push_back(complete_factorization(f));
        return node;
    }
    return FactorizationTree{FactorizationTree::Status::Indecomposable, p, std::nullopt, 0, {}};
}

bool self_loop_criterion(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("self_loop_criterion");
    for (const Edge& e : p.presentation().out_edges(p.presentation().initial()))
        if (e.dst == e.src) return true;
    return false;
}

namespace {

/// Positions of the envelope profile, with indices past the preperiod
/// reduced modulo the period.
struct ProfilePositions {
    const LeveledProfile* prof;
    int canonical(int k) const {
        const int s = static_cast<int>(prof->preperiod.size());
        const int per = static_cast<int>(prof->period.size());
        return k < s ? k : s + (k - s) % per;
    }
    const std::set<Symbol>& at(int k) const { return prof->at(static_cast<size_t>(canonical(k))); }
};

/// Breadth-first search for the length of a shortest block over the
/// position alphabets that no word of p realizes from position 0.
int shortest_dead_block_length(const Presentation& g, const ProfilePositions& pos) {
    using State = std::pair<int, std::vector<int>>;
    std::set<State> seen;
    std::vector<State> frontier{{0, {g.initial()}}};
    seen.insert(frontier.front());
    for (int length = 1;; ++length) {
        if (frontier.empty())
            throw Error("missing_configuration: no unrealized block exists (internal error)");
        std::vector<State> next_frontier;
        for (const auto& [k, subset] : frontier) {
            for (Symbol a : pos.at(k)) {
                std::vector<int> image;
                for (int v : subset) {
                    int t = g.step(v, a);
                    if (t >= 0) image.push_back(t);
                }
                image = [&] {
                    std::sort(image.begin(), image.end());
                    image.erase(std::unique(image.begin(), image.end()), image.end());
                    return image;
                }();
                if (image.empty()) return length;
                State next{pos.canonical(k + 1), std::move(image)};
                if (seen.insert(next).second) next_frontier.push_back(std::move(next));
            }
        }
        frontier = std::move(next_frontier);
    }
}

/// Memoized test: starting from survivor subset `s` at absolute position
/// `k`, does some block of length `r` over the position alphabets kill
/// every survivor?
struct DeadBlockSearch {
    const Presentation* g;
    const ProfilePositions* pos;
    std::map<std::tuple<std::vector<int>, int, int>, bool> memo;

    std::vector<int> image(const std::vector<int>& subset, Symbol a) const {
        std::vector<int> out;
        for (int v : subset) {
            int t = g->step(v, a);
            if (t >= 0) out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool has_dead(const std::vector<int>& subset, int k, int r) {
        if (subset.empty()) return true;
        if (r == 0) return false;
        auto key = std::make_tuple(subset, pos->canonical(k), r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool found = false;
        for (Symbol a : pos->at(k)) {
            if (has_dead(image(subset, a), k + 1, r - 1)) {
                found = true;
                break;
            }
        }
        memo.emplace(std::move(key), found);
        return found;
    }

    /// Lexicographically first dead block of length `r` from `subset` at
    /// position `k`, or nullopt.
    std::optional<WordBlock> first_dead(const std::vector<int>& subset, int k, int r) {
        if (!has_dead(subset, k, r)) return std::nullopt;
        WordBlock block;
        std::vector<int> cur = subset;
        for (int i = 0; i < r; ++i) {
            for (Symbol a : pos->at(k + i)) {
                std::vector<int> next = image(cur, a);
                if (has_dead(next, k + i + 1, r - i - 1)) {
                    block.push_back(a);
                    cur = std::move(next);
                    break;
                }
            }
        }
        return block;
    }
};

} // namespace

std::optional<MissingConfiguration> missing_configuration(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("missing_configuration");
    if (is_leveled(p)) return std::nullopt;
    const Presentation& g = p.presentation();
    LeveledProfile prof = position_alphabets(p);
    ProfilePositions pos{&prof};

    // A block of this length is unrealized from position 0, so a minimal
    // certificate has k + l strictly below it.
    const int bound = shortest_dead_block_length(g, pos);

    // Sets of vertices reachable in exactly k steps, for the start subsets.
    std::vector<std::vector<int>> exact(1, {g.initial()});
    for (int k = 1; k < bound; ++k) {
        std::vector<char> mark(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : exact.back())
            for (const Edge& e : g.out_edges(v)) mark[static_cast<size_t>(e.dst)] = 1;
        std::vector<int> next;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mark[static_cast<size_t>(v)]) next.push_back(v);
        exact.push_back(std::move(next));
    }

    DeadBlockSearch search{&g, &pos, {}};
    for (int total = 1; total <= bound - 1; ++total) {
        for (int k = 0; k + 1 <= total; ++k) {
            const int l = total - k;
            auto block = search.first_dead(exact[static_cast<size_t>(k)], k, l + 1);
            if (!block) continue;
            return MissingConfiguration{k, l, std::move(*block)};
        }
    }
    throw Error("missing_configuration: certificate search failed (internal error)");
}

} // namespace pathsets
