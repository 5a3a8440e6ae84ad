#include "pathsets/decimation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pathsets/errors.hpp"

namespace pathsets {

BoolRelation::BoolRelation(int m)
    : m_(m), words_per_row_((m + 63) / 64), rows_(static_cast<size_t>(m) * static_cast<size_t>(words_per_row_), 0) {}

BoolRelation BoolRelation::identity(int m) {
    BoolRelation r(m);
    for (int i = 0; i < m; ++i) r.set(i, i);
    return r;
}

bool BoolRelation::at(int i, int j) const {
    return (rows_[static_cast<size_t>(i) * static_cast<size_t>(words_per_row_) + static_cast<size_t>(j / 64)] >>
            (j % 64)) &
           1u;
}

void BoolRelation::set(int i, int j) {
    rows_[static_cast<size_t>(i) * static_cast<size_t>(words_per_row_) + static_cast<size_t>(j / 64)] |=
        uint64_t{1} << (j % 64);
}

BoolRelation BoolRelation::compose(const BoolRelation& other) const {
    BoolRelation out(m_);
    for (int i = 0; i < m_; ++i) {
        const size_t base = static_cast<size_t>(i) * static_cast<size_t>(words_per_row_);
        for (int jw = 0; jw < words_per_row_; ++jw) {
            uint64_t bits = rows_[base + static_cast<size_t>(jw)];
            while (bits) {
                int j = jw * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                const size_t obase = static_cast<size_t>(j) * static_cast<size_t>(words_per_row_);
                for (int w = 0; w < words_per_row_; ++w)
                    out.rows_[base + static_cast<size_t>(w)] |= other.rows_[obase + static_cast<size_t>(w)];
            }
        }
    }
    return out;
}

std::vector<int> BoolRelation::row(int i) const {
    std::vector<int> out;
    for (int j = 0; j < m_; ++j)
        if (at(i, j)) out.push_back(j);
    return out;
}

namespace {

/// One-step unlabeled relation and per-symbol labeled relations of a
/// canonical presentation.
struct Relations {
    BoolRelation unlabeled;
    std::vector<BoolRelation> labeled;
};

Relations relations_of(const Presentation& p) {
    const int m = p.vertex_count();
    Relations r{BoolRelation(m), {}};
    r.labeled.assign(static_cast<size_t>(p.alphabet().size()), BoolRelation(m));
    for (const Edge& e : p.edges()) {
        r.unlabeled.set(e.src, e.dst);
        r.labeled[static_cast<size_t>(e.sym)].set(e.src, e.dst);
    }
    return r;
}

std::string canonical_key(const PathSet& p) {
    std::ostringstream key;
    key << p.vertex_count();
    for (const Edge& e : p.presentation().edges()) key << '|' << e.src << ',' << e.sym << ',' << e.dst;
    return key.str();
}

/// Subset automaton over per-symbol relations, started from a set of
/// vertices, then minimized. The workhorse behind decimations: with
/// relations L_b o U^(n-1) and start row of U^j this presents psi_{j,n}(P).
PathSet subset_path_set(const Alphabet& alphabet, const std::vector<BoolRelation>& rel_by_symbol,
                        const std::vector<int>& start,
                        const std::vector<std::string>& vertex_names) {
    if (start.empty()) return PathSet::empty(alphabet);
    const int asize = alphabet.size();
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> states;
    auto intern = [&](std::vector<int> members) {
        auto [it, inserted] = ids.emplace(std::move(members), static_cast<int>(states.size()));
        if (inserted) states.push_back(it->first);
        return it->second;
    };
    intern(start);
    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(states.size()); ++s) {
        for (int a = 0; a < asize; ++a) {
            std::vector<char> in_image;
            std::vector<int> image;
            const BoolRelation& rel = rel_by_symbol[static_cast<size_t>(a)];
            in_image.assign(static_cast<size_t>(rel.size()), 0);
            for (int u : states[static_cast<size_t>(s)])
                for (int t : rel.row(u)) in_image[static_cast<size_t>(t)] = 1;
            for (int t = 0; t < rel.size(); ++t)
                if (in_image[static_cast<size_t>(t)]) image.push_back(t);
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
            name += vertex_names[static_cast<size_t>(members[i])];
        }
        name += "}";
        names.push_back(std::move(name));
    }
    Presentation raw(alphabet, std::move(names), std::move(edges), 0);
    return minimize(raw);
}

/// Vertices reachable from the initial vertex in exactly j steps.
std::vector<int> exact_step_set(const Presentation& p, int j) {
    std::vector<char> cur(static_cast<size_t>(p.vertex_count()), 0);
    cur[static_cast<size_t>(p.initial())] = 1;
    std::vector<std::vector<int>> succs(static_cast<size_t>(p.vertex_count()));
    for (const Edge& e : p.edges()) succs[static_cast<size_t>(e.src)].push_back(e.dst);
    for (int step = 0; step < j; ++step) {
        std::vector<char> next(cur.size(), 0);
        for (int v = 0; v < p.vertex_count(); ++v)
            if (cur[static_cast<size_t>(v)])
                for (int t : succs[static_cast<size_t>(v)]) next[static_cast<size_t>(t)] = 1;
        cur.swap(next);
    }
    std::vector<int> out;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (cur[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

} // namespace

Presentation shift_presentation(const PathSet& p, int j) {
    if (j < 0) throw ValidationError("InvalidArgument", "shift requires j >= 0");
    if (p.is_empty()) return p.presentation();
    const Presentation& g = p.presentation();
    std::vector<int> sources = exact_step_set(g, j);
    std::vector<std::string> names = g.vertex_names();
    names.push_back("S");
    const int fresh = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    std::set<std::pair<Symbol, int>> fresh_out;
    for (const Edge& e : g.edges())
        if (std::binary_search(sources.begin(), sources.end(), e.src))
            fresh_out.emplace(e.sym, e.dst);
    for (auto [sym, dst] : fresh_out) edges.push_back(Edge{fresh, sym, dst});
    return Presentation(g.alphabet(), std::move(names), std::move(edges), fresh);
}

PathSet shift(const PathSet& p, int j) {
    if (j < 0) throw ValidationError("InvalidArgument", "shift requires j >= 0");
    if (p.is_empty() || j == 0) return p;
    return minimize(shift_presentation(p, j));
}

PathSet decimate(const PathSet& p, DecimationIndex idx) {
    if (idx.n < 1 || idx.j < 0)
        throw ValidationError("InvalidArgument", "decimation index requires n >= 1 and j >= 0");
    if (p.is_empty()) return p;
    if (idx.n == 1) return shift(p, idx.j);
    if (idx.j >= idx.n) return decimate(shift(p, idx.j), DecimationIndex{0, idx.n});

    // Modified n-th higher-power construction on p's vertex set: an edge
    // u -> w labeled b whenever some length-n path from u to w reads b at
    // offset j, i.e. the relation U^j o L_b o U^(n-1-j).
    const Presentation& g = p.presentation();
    Relations rel = relations_of(g);
    BoolRelation before = BoolRelation::identity(g.vertex_count());
    for (int t = 0; t < idx.j; ++t) before = before.compose(rel.unlabeled);
    BoolRelation after = BoolRelation::identity(g.vertex_count());
    for (int t = 0; t < idx.n - 1 - idx.j; ++t) after = after.compose(rel.unlabeled);

    std::vector<Edge> edges;
    for (int b = 0; b < g.alphabet().size(); ++b) {
        BoolRelation m = before.compose(rel.labeled[static_cast<size_t>(b)]).compose(after);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w : m.row(u)) edges.push_back(Edge{u, b, w});
    }
    Presentation raw(g.alphabet(), g.vertex_names(), std::move(edges), g.initial());
    return minimize(raw);
}

std::pair<int, int> weak_shift_orbit(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("weak_shift_orbit");
    std::map<std::string, int> seen;
    seen.emplace(canonical_key(p), 0);
    PathSet cur = p;
    // S^j P is determined by the set of vertices reachable in exactly j
    // steps, so a repeat occurs within 2^m + 1 iterations.
    const long long limit = (1LL << std::min(p.vertex_count(), 40)) + 2;
    for (long long k = 1; k <= limit; ++k) {
        cur = shift(cur, 1);
        auto [it, inserted] = seen.emplace(canonical_key(cur), static_cast<int>(k));
        if (!inserted) return {it->second, static_cast<int>(k)};
    }
    throw Error("weak_shift_orbit: no repeat found (internal error)");
}

LeveledProfile position_alphabets(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("position_alphabets");
    const Presentation& g = p.presentation();
    std::vector<std::vector<int>> succs(static_cast<size_t>(g.vertex_count()));
    std::vector<std::vector<Symbol>> labels(static_cast<size_t>(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        succs[static_cast<size_t>(e.src)].push_back(e.dst);
        labels[static_cast<size_t>(e.src)].push_back(e.sym);
    }
    std::map<std::vector<char>, int> seen;
    std::vector<std::set<Symbol>> alphabets;
    std::vector<char> cur(static_cast<size_t>(g.vertex_count()), 0);
    cur[static_cast<size_t>(g.initial())] = 1;
    for (;;) {
        auto [it, inserted] = seen.emplace(cur, static_cast<int>(alphabets.size()));
        if (!inserted) {
            int s = it->second;
            LeveledProfile prof;
            prof.preperiod.assign(alphabets.begin(), alphabets.begin() + s);
            prof.period.assign(alphabets.begin() + s, alphabets.end());
            return prof;
        }
        std::set<Symbol> ak;
        std::vector<char> next(cur.size(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!cur[static_cast<size_t>(v)]) continue;
            for (Symbol a : labels[static_cast<size_t>(v)]) ak.insert(a);
            for (int t : succs[static_cast<size_t>(v)]) next[static_cast<size_t>(t)] = 1;
        }
        alphabets.push_back(std::move(ak));
        cur.swap(next);
    }
}

std::vector<PathSet> kernel(const PathSet& p, int n) {
    if (n < 2) throw ValidationError("InvalidArgument", "kernel requires n >= 2");
    std::map<std::string, int> seen;
    std::vector<PathSet> members;
    std::vector<PathSet> work{p};
    seen.emplace(canonical_key(p), 0);
    members.push_back(p);
    while (!work.empty()) {
        PathSet q = std::move(work.back());
        work.pop_back();
        for (PathSet next : {shift(q, 1), decimate(q, DecimationIndex{0, n})}) {
            std::string key = canonical_key(next);
            if (seen.emplace(std::move(key), static_cast<int>(members.size())).second) {
                members.push_back(next);
                work.push_back(std::move(next));
            }
        }
    }
    return sorted_unique(std::move(members));
}

RelationPowerTable relation_power_table(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("relation_power_table");
    Relations rel = relations_of(p.presentation());
    RelationPowerTable table{{}, 0, 0};
    std::map<BoolRelation, int> seen;
    BoolRelation cur = BoolRelation::identity(p.vertex_count());
    for (;;) {
        auto [it, inserted] = seen.emplace(cur, static_cast<int>(table.powers.size()));
        if (!inserted) {
            table.first_repeat = it->second;
            table.period = static_cast<int>(table.powers.size()) - it->second;
            return table;
        }
        table.powers.push_back(cur);
        cur = cur.compose(rel.unlabeled);
    }
}

FullDecimationSet full_decimation_set_certified(const PathSet& p) {
    if (p.is_empty()) throw EmptyPathSetError("full_decimation_set");
    const Presentation& g = p.presentation();
    Relations rel = relations_of(g);
    FullDecimationSet out{{}, {}, relation_power_table(p)};
    const int reps = static_cast<int>(out.table.powers.size());
    std::map<std::string, int> seen;
    std::vector<PathSet> members;
    for (int jrep = 0; jrep < reps; ++jrep) {
        std::vector<int> start = out.table.powers[static_cast<size_t>(jrep)].row(g.initial());
        for (int erep = 0; erep < reps; ++erep) {
            std::vector<BoolRelation> stepped;
            stepped.reserve(static_cast<size_t>(g.alphabet().size()));
            for (const BoolRelation& lb : rel.labeled)
                stepped.push_back(lb.compose(out.table.powers[static_cast<size_t>(erep)]));
            PathSet member = subset_path_set(g.alphabet(), stepped, start, g.vertex_names());
            std::string key = canonical_key(member);
            if (seen.emplace(std::move(key), 1).second) {
                out.certificates.push_back(CertifiedDecimation{member, DecimationIndex{jrep, erep + 1}});
                members.push_back(std::move(member));
            }
        }
    }
    out.members = sorted_unique(std::move(members));
    return out;
}

std::vector<PathSet> full_decimation_set(const PathSet& p) {
    return full_decimation_set_certified(p).members;
}

} // namespace pathsets
