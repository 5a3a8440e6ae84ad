#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "pathsets/decimation.hpp"
#include "pathsets/errors.hpp"
#include "pathsets/interleaving.hpp"
#include "pathsets/oracle.hpp"

using namespace pathsets;
namespace fx = fixtures;

namespace {

bool blocks_subset(const std::set<WordBlock>& a, const std::set<WordBlock>& b) {
    for (const WordBlock& w : a)
        if (!b.count(w)) return false;
    return true;
}

} // namespace

TEST_CASE("self-interleaving of the full shift") {
    Presentation product = interleave_product({fx::f2_graph(), fx::f2_graph()});
    CHECK(product.vertex_count() == 2);
    CHECK(product.is_right_resolving());
    CHECK(product.is_pruned());
    CHECK(equals_blockwise(product, fx::woven_f2_graph()));

    PathSet folded = minimize(product);
    CHECK(folded.vertex_count() == 1);
    CHECK(equals(folded, fx::f2()));
}

TEST_CASE("interleave product of q0 and q1 reproduces the worked example") {
    Presentation product = interleave_product({fx::q0_graph(), fx::q1_graph()});
    CHECK(product.vertex_count() == 7);
    CHECK(product.is_right_resolving());
    CHECK(product.is_pruned());
    CHECK(equals_blockwise(product, fx::woven_q0q1_product_graph()));

    PathSet woven = minimize(product);
    CHECK(woven.vertex_count() == 6);
    CHECK(equals(woven, minimize(fx::woven_q0q1_minimal_graph())));
}

TEST_CASE("unary interleaving is the identity") {
    Presentation product = interleave_product({fx::q0_graph()});
    CHECK(product.vertex_count() == 2);
    CHECK(equals(minimize(product), fx::q0()));
}

TEST_CASE("interleaving single words") {
    PathSet woven = interleave({fx::single_loop("0"), fx::single_loop("1")});
    CHECK(equals(woven, fx::c2()));
}

TEST_CASE("empty components annihilate the product") {
    PathSet none = PathSet::empty(Alphabet({"0", "1"}));
    CHECK(interleave({fx::f2(), none}).is_empty());
}

TEST_CASE("interleaving closure on fixtures") {
    CHECK(equals(interleaving_closure(fx::gm(), 2), fx::f2()));
    for (int n = 1; n <= 4; ++n) CHECK(equals(interleaving_closure(fx::f2(), n), fx::f2()));
}

TEST_CASE("factorizability on fixtures") {
    CHECK(is_n_factorizable(fx::f2(), 3));
    CHECK(!is_n_factorizable(fx::gm(), 2));
    CHECK(is_n_factorizable(fx::c2(), 5));
}

TEST_CASE("factor extraction on fixtures") {
    PathSet woven = minimize(interleave_product({fx::q0_graph(), fx::q1_graph()}));
    std::vector<PathSet> factors = interleaving_factors(woven, 2);
    REQUIRE(factors.size() == 2);
    CHECK(equals(factors[0], fx::q0()));
    CHECK(equals(factors[1], fx::q1()));

    std::vector<PathSet> c2_factors = interleaving_factors(fx::c2(), 2);
    REQUIRE(c2_factors.size() == 2);
    CHECK(equals(c2_factors[0], fx::single_loop("0")));
    CHECK(equals(c2_factors[1], fx::single_loop("1")));

    CHECK_THROWS_AS(interleaving_factors(fx::gm(), 2), NotFactorizableError);
    try {
        interleaving_factors(fx::gm(), 2);
    } catch (const NotFactorizableError& e) {
        CHECK(e.n() == 2);
    }
}

TEST_CASE("closure contains, reconstructs, and is idempotent") {
    std::mt19937 rng(9001);
    for (int trial = 0; trial < 30; ++trial) {
        PathSet p = fx::random_path_set(rng, 4, 2);
        for (int n = 2; n <= 4; ++n) {
            std::vector<PathSet> decs;
            for (int j = 0; j < n; ++j) decs.push_back(decimate(p, DecimationIndex{j, n}));
            PathSet closed = interleaving_closure(p, n);
            CHECK(equals(interleave(decs), closed));
            CHECK(blocks_subset(initial_blocks(p, 8), initial_blocks(closed, 8)));
            CHECK(equals(interleaving_closure(closed, n), closed));
        }
        CHECK(equals(interleaving_closure(p, 1), p));
    }
}

TEST_CASE("closure preserves containment") {
    std::mt19937 rng(9002);
    for (int trial = 0; trial < 30; ++trial) {
        PathSet r1 = fx::random_path_set(rng, 4, 2);
        PathSet r2 = fx::random_path_set(rng, 4, 2);
        PathSet p = intersection(r1, r2);
        const PathSet& q = r1;
        for (int n = 2; n <= 3; ++n) {
            PathSet cp = p.is_empty() ? p : interleaving_closure(p, n);
            PathSet cq = interleaving_closure(q, n);
            CHECK(blocks_subset(initial_blocks(cp, 8), initial_blocks(cq, 8)));
        }
    }
}

TEST_CASE("product size bound and structure preservation") {
    std::mt19937 rng(9003);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 2;
        std::vector<Presentation> parts;
        long long bound = n;
        for (int i = 0; i < n; ++i) {
            Presentation g = fx::random_right_resolving(rng, 3, 3);
            bound *= g.vertex_count();
            parts.push_back(std::move(g));
        }
        Presentation product = interleave_product(parts);
        CHECK(product.vertex_count() <= bound);
        CHECK(product.is_right_resolving());
        CHECK(product.is_pruned());
    }
}

TEST_CASE("factorizable levels form a divisor- and lcm-closed set") {
    std::mt19937 rng(9004);
    for (int trial = 0; trial < 25; ++trial) {
        PathSet p = fx::random_path_set(rng, 6, 2);
        std::set<int> levels;
        for (int n = 1; n <= 8; ++n)
            if (is_n_factorizable(p, n)) levels.insert(n);
        REQUIRE(levels.count(1) == 1);
        for (int n : levels) {
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) CHECK(levels.count(d) == 1);
            for (int m : levels) {
                const int l = std::lcm(n, m);
                if (l <= 8) CHECK(levels.count(l) == 1);
            }
        }
    }
}
