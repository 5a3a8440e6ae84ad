#include "pathsets/path_set.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>

#include "pathsets/errors.hpp"

namespace pathsets {

namespace {

/// Induced subgraph on the vertices with keep[v] != 0, preserving relative
/// order and names. Returns the empty presentation when the initial vertex
/// is dropped.
Presentation induced(const Presentation& p, const std::vector<char>& keep) {
    const int m = p.vertex_count();
    std::vector<int> remap(static_cast<size_t>(m), -1);
    std::vector<std::string> names;
    for (int v = 0; v < m; ++v) {
        if (keep[static_cast<size_t>(v)]) {
            remap[static_cast<size_t>(v)] = static_cast<int>(names.size());
            names.push_back(p.vertex_name(v));
        }
    }
    if (p.is_empty() || !keep[static_cast<size_t>(p.initial())])
        return Presentation::empty(p.alphabet());
    std::vector<Edge> edges;
    for (const Edge& e : p.edges()) {
        int s = remap[static_cast<size_t>(e.src)];
        int d = remap[static_cast<size_t>(e.dst)];
        if (s >= 0 && d >= 0) edges.push_back(Edge{s, e.sym, d});
    }
    return Presentation(p.alphabet(), std::move(names), std::move(edges),
                        remap[static_cast<size_t>(p.initial())]);
}

/// Deterministic transition table of a right-resolving presentation:
/// delta[v][a] = target or -1.
std::vector<std::vector<int>> delta_table(const Presentation& p) {
    std::vector<std::vector<int>> delta(static_cast<size_t>(p.vertex_count()),
                                        std::vector<int>(static_cast<size_t>(p.alphabet().size()), -1));
    for (const Edge& e : p.edges())
        delta[static_cast<size_t>(e.src)][static_cast<size_t>(e.sym)] = e.dst;
    return delta;
}

/// Merges follower-equivalent vertices of a deterministic presentation:
/// coarsest partition refinement where two vertices are equivalent iff they
/// enable the same symbols and their targets are equivalent symbol by
/// symbol (partial-function bisimulation; with every state accepting this
/// is exactly word-follower-set equality).
Presentation refine_quotient(const Presentation& p) {
    const int m = p.vertex_count();
    if (m == 0) return p;
    const int asize = p.alphabet().size();
    auto delta = delta_table(p);

    std::vector<int> cls(static_cast<size_t>(m), 0);
    {
        // Initial partition by enabled-symbol set.
        std::map<std::vector<char>, int> ids;
        for (int v = 0; v < m; ++v) {
            std::vector<char> enabled(static_cast<size_t>(asize), 0);
            for (int a = 0; a < asize; ++a)
                enabled[static_cast<size_t>(a)] = delta[static_cast<size_t>(v)][static_cast<size_t>(a)] >= 0;
            auto [it, inserted] = ids.emplace(enabled, static_cast<int>(ids.size()));
            cls[static_cast<size_t>(v)] = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(static_cast<size_t>(m), 0);
        for (int v = 0; v < m; ++v) {
            std::vector<int> sig;
            sig.reserve(static_cast<size_t>(asize) + 1);
            sig.push_back(cls[static_cast<size_t>(v)]);
            for (int a = 0; a < asize; ++a) {
                int t = delta[static_cast<size_t>(v)][static_cast<size_t>(a)];
                sig.push_back(t < 0 ? -1 : cls[static_cast<size_t>(t)]);
            }
            auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next[static_cast<size_t>(v)] = it->second;
        }
        bool stable = static_cast<int>(ids.size()) ==
                      1 + *std::max_element(cls.begin(), cls.end());
        cls.swap(next);
        if (stable) break;
    }

    int k = 1 + *std::max_element(cls.begin(), cls.end());
    std::vector<int> rep(static_cast<size_t>(k), -1);
    std::vector<std::string> names(static_cast<size_t>(k));
    for (int v = 0; v < m; ++v) {
        size_t c = static_cast<size_t>(cls[static_cast<size_t>(v)]);
        if (rep[c] < 0) {
            rep[c] = v;
            names[c] = p.vertex_name(v);
        } else {
            names[c] += "+" + p.vertex_name(v);
        }
    }
    std::vector<Edge> edges;
    for (int c = 0; c < k; ++c) {
        int r = rep[static_cast<size_t>(c)];
        for (int a = 0; a < asize; ++a) {
            int t = delta[static_cast<size_t>(r)][static_cast<size_t>(a)];
            if (t >= 0) edges.push_back(Edge{c, a, cls[static_cast<size_t>(t)]});
        }
    }
    return Presentation(p.alphabet(), std::move(names), std::move(edges),
                        cls[static_cast<size_t>(p.initial())]);
}

/// Breadth-first renumbering from the initial vertex, exploring out-edges in
/// alphabet order; vertex names become the canonical indices. Input must be
/// deterministic and reachable.
Presentation canonicalize(const Presentation& p) {
    const int m = p.vertex_count();
    if (m == 0) return p;
    const int asize = p.alphabet().size();
    auto delta = delta_table(p);
    std::vector<int> number(static_cast<size_t>(m), -1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m));
    number[static_cast<size_t>(p.initial())] = 0;
    order.push_back(p.initial());
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int a = 0; a < asize; ++a) {
            int t = delta[static_cast<size_t>(v)][static_cast<size_t>(a)];
            if (t >= 0 && number[static_cast<size_t>(t)] < 0) {
                number[static_cast<size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<std::string> names(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) names[static_cast<size_t>(i)] = std::to_string(i);
    std::vector<Edge> edges;
    edges.reserve(p.edges().size());
    for (const Edge& e : p.edges())
        edges.push_back(Edge{number[static_cast<size_t>(e.src)], e.sym,
                             number[static_cast<size_t>(e.dst)]});
    return Presentation(p.alphabet(), std::move(names), std::move(edges), 0);
}

bool structurally_identical(const Presentation& a, const Presentation& b) {
    return a.vertex_count() == b.vertex_count() && a.initial() == b.initial() &&
           a.edges() == b.edges();
}

} // namespace

PathSet PathSet::empty(Alphabet alphabet) {
    return PathSet(Presentation::empty(std::move(alphabet)));
}

Presentation prune(const Presentation& p) {
    const int m = p.vertex_count();
    std::vector<int> outdeg(static_cast<size_t>(m), 0);
    std::vector<std::vector<int>> preds(static_cast<size_t>(m));
    for (const Edge& e : p.edges()) {
        ++outdeg[static_cast<size_t>(e.src)];
        preds[static_cast<size_t>(e.dst)].push_back(e.src);
    }
    std::vector<char> alive(static_cast<size_t>(m), 1);
    std::queue<int> dead;
    for (int v = 0; v < m; ++v)
        if (outdeg[static_cast<size_t>(v)] == 0) dead.push(v);
    while (!dead.empty()) {
        int v = dead.front();
        dead.pop();
        if (!alive[static_cast<size_t>(v)]) continue;
        alive[static_cast<size_t>(v)] = 0;
        for (int u : preds[static_cast<size_t>(v)]) {
            if (alive[static_cast<size_t>(u)] && --outdeg[static_cast<size_t>(u)] == 0)
                dead.push(u);
        }
    }
    return induced(p, alive);
}

Presentation restrict_reachable(const Presentation& p) {
    if (p.is_empty()) return p;
    const int m = p.vertex_count();
    std::vector<std::vector<int>> succs(static_cast<size_t>(m));
    for (const Edge& e : p.edges()) succs[static_cast<size_t>(e.src)].push_back(e.dst);
    std::vector<char> seen(static_cast<size_t>(m), 0);
    std::queue<int> queue;
    seen[static_cast<size_t>(p.initial())] = 1;
    queue.push(p.initial());
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int t : succs[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                queue.push(t);
            }
        }
    }
    return induced(p, seen);
}

Presentation determinize(const Presentation& p) {
    if (p.is_empty()) return p;
    const int asize = p.alphabet().size();
    // Successor lists per (vertex, symbol).
    std::vector<std::vector<std::vector<int>>> succ(
        static_cast<size_t>(p.vertex_count()),
        std::vector<std::vector<int>>(static_cast<size_t>(asize)));
    for (const Edge& e : p.edges())
        succ[static_cast<size_t>(e.src)][static_cast<size_t>(e.sym)].push_back(e.dst);

    std::map<std::vector<int>, int> state_ids;
    std::vector<std::vector<int>> states;
    auto intern = [&](std::vector<int> members) {
        auto [it, inserted] = state_ids.emplace(std::move(members), static_cast<int>(states.size()));
        if (inserted) states.push_back(it->first);
        return it->second;
    };
    intern({p.initial()});
    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(states.size()); ++s) {
        for (int a = 0; a < asize; ++a) {
            std::vector<int> image;
            for (int u : states[static_cast<size_t>(s)])
                for (int t : succ[static_cast<size_t>(u)][static_cast<size_t>(a)])
                    image.push_back(t);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.empty()) continue;
            int t = intern(std::move(image));
            edges.push_back(Edge{s, a, t});
        }
    }
    std::vector<std::string> names;
    names.reserve(states.size());
    for (const auto& members : states) {
        std::string name = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) name += ",";
            name += p.vertex_name(members[i]);
        }
        name += "}";
        names.push_back(std::move(name));
    }
    return Presentation(p.alphabet(), std::move(names), std::move(edges), 0);
}

PathSet minimize(const Presentation& p) {
    Presentation q = restrict_reachable(prune(p));
    if (q.is_empty()) return PathSet(Presentation::empty(p.alphabet()));
    q = determinize(q);
    q = refine_quotient(q);
    q = canonicalize(q);
    return PathSet(std::move(q));
}

PathSet reembed(const PathSet& p, const Alphabet& unified) {
    if (p.is_empty()) return PathSet::empty(unified);
    if (p.alphabet() == unified) return p;
    std::vector<Edge> edges;
    edges.reserve(p.presentation().edges().size());
    for (const Edge& e : p.presentation().edges()) {
        auto s = unified.index_of(p.alphabet().name(e.sym));
        if (!s)
            throw ValidationError("UnknownSymbol",
                                  "alphabet does not cover symbol '" + p.alphabet().name(e.sym) + "'");
        edges.push_back(Edge{e.src, *s, e.dst});
    }
    Presentation q(unified, p.presentation().vertex_names(), std::move(edges),
                   p.presentation().initial());
    return minimize(q);
}

bool equals(const PathSet& a, const PathSet& b) {
    if (a.alphabet() == b.alphabet())
        return structurally_identical(a.presentation(), b.presentation());
    Alphabet unified = Alphabet::unify(a.alphabet(), b.alphabet());
    return structurally_identical(reembed(a, unified).presentation(),
                                  reembed(b, unified).presentation());
}

namespace {

void collect_blocks(const std::vector<std::vector<std::vector<int>>>& succ, int asize,
                    const std::vector<int>& state, WordBlock& prefix, int remaining,
                    std::set<WordBlock>& out) {
    if (remaining == 0) return;
    for (int a = 0; a < asize; ++a) {
        std::vector<int> image;
        for (int u : state)
            for (int t : succ[static_cast<size_t>(u)][static_cast<size_t>(a)])
                image.push_back(t);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image.empty()) continue;
        prefix.push_back(a);
        out.insert(prefix);
        collect_blocks(succ, asize, image, prefix, remaining - 1, out);
        prefix.pop_back();
    }
}

} // namespace

std::set<WordBlock> initial_blocks(const Presentation& p, int depth) {
    Presentation q = restrict_reachable(prune(p));
    if (q.is_empty()) return {};
    const int asize = q.alphabet().size();
    std::vector<std::vector<std::vector<int>>> succ(
        static_cast<size_t>(q.vertex_count()),
        std::vector<std::vector<int>>(static_cast<size_t>(asize)));
    for (const Edge& e : q.edges())
        succ[static_cast<size_t>(e.src)][static_cast<size_t>(e.sym)].push_back(e.dst);
    std::set<WordBlock> out;
    out.insert(WordBlock{});
    WordBlock prefix;
    std::vector<int> start{q.initial()};
    collect_blocks(succ, asize, start, prefix, depth, out);
    return out;
}

std::set<WordBlock> initial_blocks(const PathSet& p, int depth) {
    return initial_blocks(p.presentation(), depth);
}

PathSet intersection(const PathSet& a, const PathSet& b) {
    Alphabet unified = Alphabet::unify(a.alphabet(), b.alphabet());
    if (a.is_empty() || b.is_empty()) return PathSet::empty(unified);
    PathSet ua = reembed(a, unified);
    PathSet ub = reembed(b, unified);
    const int asize = unified.size();

    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> states;
    auto intern = [&](std::pair<int, int> s) {
        auto [it, inserted] = ids.emplace(s, static_cast<int>(states.size()));
        if (inserted) states.push_back(s);
        return it->second;
    };
    intern({0, 0});
    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(states.size()); ++s) {
        auto [u, v] = states[static_cast<size_t>(s)];
        for (int sym = 0; sym < asize; ++sym) {
            int tu = ua.step(u, sym);
            int tv = ub.step(v, sym);
            if (tu < 0 || tv < 0) continue;
            edges.push_back(Edge{s, sym, intern({tu, tv})});
        }
    }
    std::vector<std::string> names;
    names.reserve(states.size());
    for (auto [u, v] : states)
        names.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
    Presentation prod(unified, std::move(names), std::move(edges), 0);
    return minimize(prod);
}

PathSet union_sets(const PathSet& a, const PathSet& b) {
    Alphabet unified = Alphabet::unify(a.alphabet(), b.alphabet());
    PathSet ua = reembed(a, unified);
    PathSet ub = reembed(b, unified);
    if (ua.is_empty()) return ub;
    if (ub.is_empty()) return ua;
    const int ma = ua.vertex_count();
    const int mb = ub.vertex_count();
    std::vector<std::string> names;
    for (int v = 0; v < ma; ++v) names.push_back("A" + std::to_string(v));
    for (int v = 0; v < mb; ++v) names.push_back("B" + std::to_string(v));
    names.push_back("W");
    const int fresh = ma + mb;
    std::vector<Edge> edges;
    for (const Edge& e : ua.presentation().edges()) {
        edges.push_back(e);
        if (e.src == 0) edges.push_back(Edge{fresh, e.sym, e.dst});
    }
    for (const Edge& e : ub.presentation().edges()) {
        edges.push_back(Edge{e.src + ma, e.sym, e.dst + ma});
        if (e.src == 0) edges.push_back(Edge{fresh, e.sym, e.dst + ma});
    }
    Presentation glued(unified, std::move(names), std::move(edges), fresh);
    return minimize(glued);
}

PathSet word_path_set(const PathSet& p, const WordBlock& w) {
    if (p.is_empty()) return p;
    int v = 0;
    for (Symbol s : w) {
        if (s < 0 || s >= p.alphabet().size()) return PathSet::empty(p.alphabet());
        v = p.step(v, s);
        if (v < 0) return PathSet::empty(p.alphabet());
    }
    Presentation rerooted(p.alphabet(), p.presentation().vertex_names(),
                          p.presentation().edges(), v);
    return minimize(rerooted);
}

bool canonical_less(const PathSet& a, const PathSet& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    if (a.presentation().edges() != b.presentation().edges())
        return a.presentation().edges() < b.presentation().edges();
    return a.alphabet().names() < b.alphabet().names();
}

std::vector<PathSet> sorted_unique(std::vector<PathSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    std::vector<PathSet> out;
    for (auto& s : sets) {
        if (out.empty() || canonical_less(out.back(), s)) out.push_back(std::move(s));
    }
    return out;
}

} // namespace pathsets
