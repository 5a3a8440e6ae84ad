#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "pathsets/errors.hpp"
#include "pathsets/oracle.hpp"
#include "pathsets/path_set.hpp"

using namespace pathsets;
namespace fx = fixtures;

namespace {

std::string validation_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.kind();
    }
    return "";
}

} // namespace

TEST_CASE("alphabet validation and unification") {
    CHECK(validation_kind([] { Alphabet a(std::vector<std::string>{}); }) == "EmptyAlphabet");
    CHECK(validation_kind([] { Alphabet a({"0", "1", "0"}); }) == "DuplicateSymbol");

    Alphabet a({"0", "1", "2"});
    CHECK(a.size() == 3);
    CHECK(a.index_of("2") == 2);
    CHECK(!a.index_of("9"));

    Alphabet b({"2", "3"});
    Alphabet u = Alphabet::unify(a, b);
    CHECK((u.names() == std::vector<std::string>{"0", "1", "2", "3"}));
}

TEST_CASE("presentation validation") {
    CHECK(validation_kind([] { fx::make({"0"}, {"x", "x"}, {}, "x"); }) == "DuplicateVertex");
    CHECK(validation_kind([] { fx::make({"0"}, {"x"}, {{"x", "0", "y"}}, "x"); }) == "UnknownVertex");
    CHECK(validation_kind([] { fx::make({"0"}, {"x"}, {{"x", "7", "x"}}, "x"); }) == "UnknownSymbol");
    CHECK(validation_kind([] {
              fx::make({"0"}, {"x"}, {{"x", "0", "x"}, {"x", "0", "x"}}, "x");
          }) == "DuplicateEdgeTriple");
    CHECK(validation_kind([] { fx::make({"0"}, {"x"}, {}, ""); }) == "MissingInitial");

    Presentation f2 = fx::f2_graph();
    CHECK(f2.vertex_count() == 1);
    CHECK(f2.is_right_resolving());
    CHECK(f2.is_pruned());
}

TEST_CASE("pruning removes sinks until a fixed point") {
    Presentation with_sink = fx::make({"2", "3", "4"}, {"v2", "v3", "d"},
                                      {{"v2", "3", "v3"}, {"v3", "2", "v3"}, {"v3", "4", "d"}}, "v2");
    Presentation pruned = prune(with_sink);
    CHECK(pruned.vertex_count() == 2);
    CHECK(pruned.edges().size() == 2);

    Presentation f2 = prune(fx::f2_graph());
    CHECK(f2.vertex_count() == 1);
    CHECK(f2.edges().size() == 2);

    Presentation dead = prune(fx::make({"0"}, {"x", "y"}, {{"x", "0", "y"}}, "x"));
    CHECK(dead.is_empty());
}

TEST_CASE("reachability restriction") {
    Presentation with_isolated = fx::make(
        {"0", "1", "2"}, {"v0", "v1", "z"},
        {{"v0", "0", "v0"}, {"v0", "1", "v1"}, {"v1", "2", "v1"}, {"z", "0", "z"}}, "v0");
    Presentation restricted = restrict_reachable(with_isolated);
    CHECK(restricted.vertex_count() == 2);
    CHECK(restricted.edges().size() == 3);

    CHECK(restrict_reachable(fx::f2_graph()).vertex_count() == 1);
}

TEST_CASE("subset construction on the nondeterministic fixture") {
    Presentation det = determinize(fx::nd_graph());
    CHECK(det.is_right_resolving());
    CHECK((det.vertex_names() == std::vector<std::string>{"{n0}", "{n1,n2}", "{n1}", "{n2}"}));
    CHECK((det.edges() == std::vector<Edge>{{0, 0, 1}, {1, 1, 2}, {1, 2, 3}, {2, 1, 2}, {3, 2, 3}}));
    CHECK(initial_blocks(det, 6) == initial_blocks(fx::nd_graph(), 6));
}

TEST_CASE("minimization on worked examples") {
    PathSet folded = minimize(fx::woven_f2_graph());
    CHECK(folded.vertex_count() == 1);
    CHECK(equals(folded, fx::f2()));

    PathSet q0 = fx::q0();
    CHECK(q0.vertex_count() == 2);
    CHECK(equals(q0, minimize(q0.presentation())));

    CHECK(!equals(fx::q0(), fx::q1()));
}

TEST_CASE("initial blocks of the fixtures") {
    PathSet q1 = fx::q1();
    CHECK(initial_blocks(q1, 3) == fx::words(q1.alphabet(), {"", "3", "32", "322"}));

    PathSet f2 = fx::f2();
    CHECK(initial_blocks(f2, 2) == fx::words(f2.alphabet(), {"", "0", "1", "00", "01", "10", "11"}));

    PathSet none = PathSet::empty(Alphabet({"0"}));
    CHECK(initial_blocks(none, 5).empty());
}

TEST_CASE("intersection") {
    CHECK(equals(intersection(fx::f2(), fx::gm()), fx::gm()));
    CHECK(intersection(fx::q0(), fx::q1()).is_empty());
    CHECK(equals(intersection(fx::q0(), fx::q0()), fx::q0()));
}

TEST_CASE("union") {
    PathSet zeros = fx::single_loop("0");
    PathSet ones = fx::single_loop("1");
    PathSet u = union_sets(zeros, ones);
    CHECK(u.vertex_count() == 3);
    CHECK(initial_blocks(u, 6) == fx::words(u.alphabet(), {"", "0", "1", "00", "11", "000", "111", "0000", "1111",
                                                           "00000", "11111", "000000", "111111"}));
    CHECK(equals(union_sets(fx::gm(), fx::f2()), fx::f2()));
    CHECK(equals(union_sets(fx::q0(), fx::q0()), fx::q0()));
}

TEST_CASE("word path sets") {
    PathSet q0 = fx::q0();
    PathSet tail = word_path_set(q0, fx::word(q0.alphabet(), "01"));
    CHECK(tail.vertex_count() == 1);
    CHECK(initial_blocks(tail, 2) == fx::words(q0.alphabet(), {"", "2", "22"}));
    CHECK(equals(word_path_set(q0, fx::word(q0.alphabet(), "0")), q0));
    CHECK(word_path_set(q0, fx::word(q0.alphabet(), "2")).is_empty());
}

TEST_CASE("minimize produces canonical forms and preserves blocks") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        Presentation p = fx::random_presentation(rng, 5, 3);
        PathSet q = minimize(p);
        if (!q.is_empty()) {
            CHECK(q.presentation().is_right_resolving());
            CHECK(q.presentation().is_pruned());
            CHECK(q.presentation().initial() == 0);
        }
        CHECK(initial_blocks(p, 8) == initial_blocks(q, 8));
        PathSet again = minimize(q.presentation());
        CHECK(equals(q, again));
        CHECK(q.presentation().vertex_names() == again.presentation().vertex_names());
        CHECK(q.presentation().edges() == again.presentation().edges());

        Presentation trimmed = restrict_reachable(prune(p));
        if (!trimmed.is_empty()) {
            Presentation det = determinize(trimmed);
            CHECK(det.vertex_count() <= (1 << trimmed.vertex_count()) - 1);
        }
    }
}

TEST_CASE("equality agrees with the block-comparison oracle") {
    std::mt19937 rng(318);
    int positives = 0;
    for (int trial = 0; trial < 120; ++trial) {
        PathSet a = fx::random_path_set(rng, 4, 2);
        PathSet b = fx::random_path_set(rng, 4, 2);
        bool structural = equals(a, b);
        bool blockwise = equals_blockwise(a.presentation(), b.presentation());
        CHECK(structural == blockwise);
        positives += structural ? 1 : 0;
        CHECK(equals(a, a));
    }
    CHECK(positives > 0);
}

TEST_CASE("minimal vertex count equals the number of distinct residuals") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 60; ++trial) {
        PathSet q = fx::random_path_set(rng, 5, 3);
        const int m = q.vertex_count();
        std::set<std::set<WordBlock>> residuals;
        for (const WordBlock& b : initial_blocks(q, m - 1))
            residuals.insert(initial_blocks(word_path_set(q, b), m));
        CHECK(static_cast<int>(residuals.size()) == m);
    }
}

TEST_CASE("follower separation is witnessed by words of length at most m") {
    std::mt19937 rng(417);
    for (int trial = 0; trial < 60; ++trial) {
        Presentation g = fx::random_right_resolving(rng, 5, 3);
        const int m = g.vertex_count();
        std::vector<PathSet> rooted;
        std::vector<std::set<WordBlock>> word_sets;
        for (int v = 0; v < m; ++v) {
            Presentation at_v(g.alphabet(), g.vertex_names(), g.edges(), v);
            rooted.push_back(minimize(at_v));
            word_sets.push_back(initial_blocks(at_v, m));
        }
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                CHECK(equals(rooted[u], rooted[v]) == (word_sets[u] == word_sets[v]));
    }
}

TEST_CASE("set operations agree with block-level set operations") {
    std::mt19937 rng(5150);
    const int depth = 6;
    for (int trial = 0; trial < 80; ++trial) {
        PathSet a = fx::random_path_set(rng, 4, 2);
        PathSet b = fx::random_path_set(rng, 4, 2);

        std::set<WordBlock> expected_union = initial_blocks(a, depth);
        auto bb = initial_blocks(b, depth);
        expected_union.insert(bb.begin(), bb.end());
        CHECK(initial_blocks(union_sets(a, b), depth) == expected_union);

        std::set<WordBlock> common;
        auto aa = initial_blocks(a, depth);
        for (const WordBlock& w : aa)
            if (bb.count(w)) common.insert(w);
        auto meet = initial_blocks(intersection(a, b), depth);
        for (const WordBlock& w : meet) CHECK(common.count(w));
    }
}

TEST_CASE("sorted_unique deduplicates by canonical order") {
    std::vector<PathSet> sets{fx::f2(), fx::gm(), fx::f2()};
    std::vector<PathSet> unique = sorted_unique(std::move(sets));
    CHECK(unique.size() == 2);
    CHECK(canonical_less(unique[0], unique[1]));
}
