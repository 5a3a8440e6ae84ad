#pragma once

// Shared fixture graphs and random generators for the test suites.

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pathsets/errors.hpp"
#include "pathsets/graph_io.hpp"
#include "pathsets/path_set.hpp"

namespace fixtures {

using pathsets::Alphabet;
using pathsets::Edge;
using pathsets::PathSet;
using pathsets::Presentation;
using pathsets::Symbol;
using pathsets::WordBlock;

inline Presentation make(const std::vector<std::string>& alphabet, const std::vector<std::string>& vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& edges,
                         const std::string& initial) {
    return pathsets::validate(Alphabet(alphabet), vertices, edges, initial);
}

/// Full binary shift {0,1}^inf: one vertex with self-loops 0 and 1.
inline Presentation f2_graph() {
    return make({"0", "1"}, {"q0"}, {{"q0", "0", "q0"}, {"q0", "1", "q0"}}, "q0");
}
inline PathSet f2() { return pathsets::minimize(f2_graph()); }

/// {0^k 1 2^inf} with 0^inf: v0 loops on 0, exits on 1 to the 2-loop v1.
inline Presentation q0_graph() {
    return make({"0", "1", "2"}, {"v0", "v1"}, {{"v0", "0", "v0"}, {"v0", "1", "v1"}, {"v1", "2", "v1"}}, "v0");
}
inline PathSet q0() { return pathsets::minimize(q0_graph()); }

/// The single word 32^inf.
inline Presentation q1_graph() {
    return make({"2", "3"}, {"v2", "v3"}, {{"v2", "3", "v3"}, {"v3", "2", "v3"}}, "v2");
}
inline PathSet q1() { return pathsets::minimize(q1_graph()); }

/// Golden-mean set: binary words with no factor 11.
inline Presentation gm_graph() {
    return make({"0", "1"}, {"g0", "g1"}, {{"g0", "0", "g0"}, {"g0", "1", "g1"}, {"g1", "0", "g0"}}, "g0");
}
inline PathSet gm() { return pathsets::minimize(gm_graph()); }

/// The single word (01)^inf as a 2-cycle.
inline Presentation c2_graph() {
    return make({"0", "1"}, {"c0", "c1"}, {{"c0", "0", "c1"}, {"c1", "1", "c0"}}, "c0");
}
inline PathSet c2() { return pathsets::minimize(c2_graph()); }

/// Nondeterministic fixture: two a-edges from the initial vertex.
inline Presentation nd_graph() {
    return make({"a", "b", "c"}, {"n0", "n1", "n2"},
                {{"n0", "a", "n1"}, {"n0", "a", "n2"}, {"n1", "b", "n1"}, {"n2", "c", "n2"}}, "n0");
}

/// Two-vertex presentation of the self-interleaving of the full shift.
inline Presentation woven_f2_graph() {
    return make({"0", "1"}, {"v0v1", "v1v0"},
                {{"v0v1", "0", "v1v0"},
                 {"v0v1", "1", "v1v0"},
                 {"v1v0", "0", "v0v1"},
                 {"v1v0", "1", "v0v1"}},
                "v0v1");
}

/// Seven-vertex interleave product of q0 and q1.
inline Presentation woven_q0q1_product_graph() {
    return make({"0", "1", "2", "3"}, {"v0v2", "v2v0", "v2v1", "v0v3", "v1v3", "v3v0", "v3v1"},
                {{"v0v2", "0", "v2v0"},
                 {"v0v2", "1", "v2v1"},
                 {"v2v0", "3", "v0v3"},
                 {"v2v1", "3", "v1v3"},
                 {"v0v3", "0", "v3v0"},
                 {"v0v3", "1", "v3v1"},
                 {"v1v3", "2", "v3v1"},
                 {"v3v0", "2", "v0v3"},
                 {"v3v1", "2", "v1v3"}},
                "v0v2");
}

/// Six-vertex minimal presentation of the same interleaving.
inline Presentation woven_q0q1_minimal_graph() {
    return make({"0", "1", "2", "3"}, {"v0v2", "v2v0", "v2v1", "v0v3", "v3v0", "v3v1"},
                {{"v0v2", "0", "v2v0"},
                 {"v0v2", "1", "v2v1"},
                 {"v2v0", "3", "v0v3"},
                 {"v2v1", "3", "v3v1"},
                 {"v0v3", "0", "v3v0"},
                 {"v0v3", "1", "v3v1"},
                 {"v3v0", "2", "v0v3"},
                 {"v3v1", "2", "v3v1"}},
                "v0v2");
}

/// Eight-vertex leveled fixture with preperiod 2 and period 6.
inline Presentation leveled8_graph() {
    return make({"0", "1", "2", "3"}, {"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                {{"v0", "1", "v1"},
                 {"v1", "0", "v2"},
                 {"v1", "2", "v2"},
                 {"v2", "1", "v3"},
                 {"v3", "1", "v4"},
                 {"v3", "2", "v4"},
                 {"v4", "3", "v5"},
                 {"v5", "1", "v6"},
                 {"v6", "0", "v7"},
                 {"v6", "3", "v7"},
                 {"v7", "3", "v2"}},
                "v0");
}
inline PathSet leveled8() { return pathsets::minimize(leveled8_graph()); }

/// {s^inf} over the singleton alphabet {s}.
inline PathSet single_loop(const std::string& s) {
    return pathsets::minimize(make({s}, {"w"}, {{"w", s, "w"}}, "w"));
}

/// The single periodic word (w)^inf over the given alphabet.
inline PathSet periodic_word(const std::vector<std::string>& alphabet, const std::vector<std::string>& letters) {
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    const size_t k = letters.size();
    for (size_t i = 0; i < k; ++i) vertices.push_back("p" + std::to_string(i));
    for (size_t i = 0; i < k; ++i)
        edges.emplace_back(vertices[i], letters[i], vertices[(i + 1) % k]);
    return pathsets::minimize(make(alphabet, vertices, edges, vertices[0]));
}

/// Parses a word over single-character symbol names ("322" over {2,3}).
inline WordBlock word(const Alphabet& alphabet, const std::string& letters) {
    WordBlock w;
    for (char c : letters) {
        auto idx = alphabet.index_of(std::string(1, c));
        if (!idx) throw pathsets::Error("fixture word uses unknown symbol");
        w.push_back(*idx);
    }
    return w;
}

inline std::set<WordBlock> words(const Alphabet& alphabet, const std::vector<std::string>& list) {
    std::set<WordBlock> out;
    for (const std::string& s : list) out.insert(word(alphabet, s));
    return out;
}

inline const std::vector<std::string>& digit_names() {
    static const std::vector<std::string> names{"0", "1", "2", "3"};
    return names;
}

/// Random right-resolving pruned presentation: every vertex has at least one
/// out-edge and at most one per symbol, so minimization never empties it.
inline Presentation random_right_resolving(std::mt19937& rng, int max_vertices, int max_alphabet,
                                           bool force_initial_self_loop = false) {
    const int m = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    const int asz = std::uniform_int_distribution<int>(1, max_alphabet)(rng);
    std::vector<std::string> alphabet(digit_names().begin(), digit_names().begin() + asz);
    std::vector<std::string> vertices;
    for (int v = 0; v < m; ++v) vertices.push_back("u" + std::to_string(v));
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> target(0, m - 1);
    std::uniform_int_distribution<int> letter(0, asz - 1);
    std::vector<Edge> edges;
    for (int v = 0; v < m; ++v) {
        bool any = false;
        for (Symbol a = 0; a < asz; ++a) {
            if (coin(rng)) {
                edges.push_back(Edge{v, a, target(rng)});
                any = true;
            }
        }
        if (!any) edges.push_back(Edge{v, letter(rng), target(rng)});
    }
    if (force_initial_self_loop) {
        const Symbol a = letter(rng);
        std::erase_if(edges, [&](const Edge& e) { return e.src == 0 && e.sym == a; });
        edges.push_back(Edge{0, a, 0});
    }
    return Presentation(Alphabet(alphabet), vertices, std::move(edges), 0);
}

/// Random presentation without structural guarantees: may be
/// nondeterministic, may contain sinks and unreachable parts, may denote the
/// empty path set.
inline Presentation random_presentation(std::mt19937& rng, int max_vertices, int max_alphabet) {
    const int m = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    const int asz = std::uniform_int_distribution<int>(1, max_alphabet)(rng);
    std::vector<std::string> alphabet(digit_names().begin(), digit_names().begin() + asz);
    std::vector<std::string> vertices;
    for (int v = 0; v < m; ++v) vertices.push_back("u" + std::to_string(v));
    std::uniform_int_distribution<int> source(0, m - 1);
    std::uniform_int_distribution<int> letter(0, asz - 1);
    const int want = std::uniform_int_distribution<int>(0, 3 * m)(rng);
    std::set<Edge> edges;
    for (int i = 0; i < want; ++i) edges.insert(Edge{source(rng), letter(rng), source(rng)});
    return Presentation(Alphabet(alphabet), vertices, std::vector<Edge>(edges.begin(), edges.end()), 0);
}

inline PathSet random_path_set(std::mt19937& rng, int max_vertices, int max_alphabet,
                               bool force_initial_self_loop = false) {
    return pathsets::minimize(random_right_resolving(rng, max_vertices, max_alphabet, force_initial_self_loop));
}

} // namespace fixtures
