#include "pathsets/interleaving.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pathsets/decimation.hpp"
#include "pathsets/errors.hpp"

namespace pathsets {

namespace {

Alphabet unified_alphabet(const std::vector<Presentation>& components) {
    Alphabet unified = components.front().alphabet();
    for (size_t i = 1; i < components.size(); ++i) unified = Alphabet::unify(unified, components[i].alphabet());
    return unified;
}

/// Remap a presentation's symbols into a unified alphabet by name.
Presentation with_alphabet(const Presentation& p, const Alphabet& unified) {
    std::vector<Symbol> remap(static_cast<size_t>(p.alphabet().size()));
    for (Symbol a = 0; a < p.alphabet().size(); ++a) {
        auto idx = unified.index_of(p.alphabet().name(a));
        if (!idx) throw ValidationError("UnknownSymbol", "symbol '" + p.alphabet().name(a) + "' not in unified alphabet");
        remap[static_cast<size_t>(a)] = *idx;
    }
    std::vector<Edge> edges;
    edges.reserve(p.edges().size());
    for (const Edge& e : p.edges()) edges.push_back(Edge{e.src, remap[static_cast<size_t>(e.sym)], e.dst});
    return Presentation(unified, p.vertex_names(), std::move(edges), p.initial());
}

} // namespace

Presentation interleave_product(const std::vector<Presentation>& components) {
    if (components.empty()) throw ValidationError("InvalidArgument", "interleave requires at least one component");
    Alphabet unified = unified_alphabet(components);
    std::vector<Presentation> parts;
    parts.reserve(components.size());
    for (const Presentation& c : components) parts.push_back(with_alphabet(c, unified));
    for (const Presentation& c : parts)
        if (c.is_empty()) return Presentation::empty(unified);

    const int n = static_cast<int>(parts.size());

    // States are phase-tagged rotated tuples (u_i, ..., u_{i-1}) at phase i.
    // The leftmost entry is the component whose turn it is; reading one of
    // its edges advances that component and rotates the tuple left.
    using State = std::pair<int, std::vector<int>>;
    std::map<State, int> ids;
    std::vector<State> states;
    auto intern = [&](State s) {
        auto [it, inserted] = ids.emplace(std::move(s), static_cast<int>(states.size()));
        if (inserted) states.push_back(it->first);
        return it->second;
    };
    std::vector<int> initial_tuple;
    initial_tuple.reserve(static_cast<size_t>(n));
    for (const Presentation& c : parts) initial_tuple.push_back(c.initial());
    intern(State{0, std::move(initial_tuple)});

    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(states.size()); ++s) {
        const auto [phase, tuple] = states[static_cast<size_t>(s)];
        const Presentation& active = parts[static_cast<size_t>(phase)];
        for (const Edge& e : active.out_edges(tuple.front())) {
            std::vector<int> next(tuple.begin() + 1, tuple.end());
            next.push_back(e.dst);
            int t = intern(State{(phase + 1) % n, std::move(next)});
            edges.push_back(Edge{s, e.sym, t});
        }
    }

    std::vector<std::string> names;
    names.reserve(states.size());
    for (const auto& [phase, tuple] : states) {
        std::string name;
        for (int i = 0; i < n; ++i) {
            if (i) name += ",";
            name += parts[static_cast<size_t>((phase + i) % n)].vertex_name(tuple[static_cast<size_t>(i)]);
        }
        name += "@" + std::to_string(phase);
        names.push_back(std::move(name));
    }
    return Presentation(unified, std::move(names), std::move(edges), 0);
}

PathSet interleave(const std::vector<PathSet>& components) {
    if (components.empty()) throw ValidationError("InvalidArgument", "interleave requires at least one component");
    std::vector<Presentation> parts;
    parts.reserve(components.size());
    for (const PathSet& c : components) parts.push_back(c.presentation());
    return minimize(interleave_product(parts));
}

PathSet interleaving_closure(const PathSet& p, int n) {
    if (n < 1) throw ValidationError("InvalidArgument", "interleaving closure requires n >= 1");
    std::vector<PathSet> factors;
    factors.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) factors.push_back(decimate(p, DecimationIndex{j, n}));
    return interleave(factors);
}

bool is_n_factorizable(const PathSet& p, int n) {
    return equals(p, interleaving_closure(p, n));
}

std::vector<PathSet> interleaving_factors(const PathSet& p, int n) {
    if (n < 1) throw ValidationError("InvalidArgument", "interleaving factors require n >= 1");
    std::vector<PathSet> factors;
    factors.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) factors.push_back(decimate(p, DecimationIndex{j, n}));
    if (!equals(p, interleave(factors))) throw NotFactorizableError(n);
    return factors;
}

} // namespace pathsets
