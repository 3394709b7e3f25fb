#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "kneser_b/coloring.hpp"
#include "kneser_b/kneser.hpp"
#include "kneser_b/verify.hpp"

using namespace kneser_b;

TEST_CASE("KneserParams validation") {
    CHECK_NOTHROW(KneserParams(4, 2));
    CHECK_THROWS_AS(KneserParams(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(KneserParams(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(KneserParams(65, 3), std::invalid_argument);
}

TEST_CASE("adjacency is disjointness") {
    CHECK(adjacent(VertexSet{0, 1}, VertexSet{2, 3}));
    CHECK_FALSE(adjacent(VertexSet{0, 1}, VertexSet{1, 2}));
    CHECK_FALSE(adjacent(VertexSet{0, 1}, VertexSet{0, 1}));
}

TEST_CASE("adjacency is symmetric and irreflexive on small graphs") {
    const KneserParams p(7, 2);
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        CHECK_FALSE(adjacent(a, a));
        for (VertexSet b : iterate_subsets(p.m, p.n)) CHECK(adjacent(a, b) == adjacent(b, a));
    }
}

TEST_CASE("neighbors of a Petersen vertex") {
    const KneserParams p(5, 2);
    CHECK(neighbors(VertexSet{0, 1}, p) == std::vector<VertexSet>{{2, 3}, {2, 4}, {3, 4}});
    for (unsigned n = 1; n <= 5; ++n) {
        const KneserParams matching(2 * n, n);
        const VertexSet a = VertexSet::interval(0, n);
        CHECK(neighbors(a, matching) == std::vector<VertexSet>{matching.ground() - a});
    }
}

TEST_CASE("neighbors equal a direct filter of all vertices") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 2 * n; m <= 11; ++m) {
            const KneserParams p(m, n);
            for (VertexSet a : iterate_subsets(m, n)) {
                std::vector<VertexSet> filtered;
                for (VertexSet b : iterate_subsets(m, n))
                    if (a.disjoint(b)) filtered.push_back(b);
                const auto got = neighbors(a, p);
                REQUIRE(got == filtered);
                REQUIRE(got.size() == binomial(m - n, n));

                std::vector<std::uint64_t> ranks;
                for_each_neighbor_rank(a, p, [&](std::uint64_t r) { ranks.push_back(r); });
                REQUIRE(ranks.size() == got.size());
                for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(ranks[i] == rank(got[i], n).index);
            }
        }
    }
}

TEST_CASE("max degree") {
    CHECK(max_degree(KneserParams(5, 2)) == 3);
    for (unsigned n = 1; n <= 6; ++n) CHECK(max_degree(KneserParams(2 * n, n)) == 1);
    // counted neighbors of one vertex
    const KneserParams p(10, 3);
    CHECK(max_degree(p) == neighbors(VertexSet{0, 1, 2}, p).size());
    CHECK(max_degree(p) == 35);
}

TEST_CASE("chromatic number formula") {
    CHECK(chromatic_number(KneserParams(5, 2)) == 3);
    CHECK(chromatic_number(KneserParams(10, 3)) == 6);
    for (unsigned n = 1; n <= 8; ++n) CHECK(chromatic_number(KneserParams(2 * n, n)) == 2);
}

TEST_CASE("standard proper coloring") {
    const Coloring c = standard_proper_coloring(KneserParams(5, 2));
    CHECK(c.label_of(VertexSet{0, 4}) == ColorLabel::synthetic(0));
    CHECK(c.label_of(VertexSet{3, 4}) == ColorLabel::synthetic(2));

    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned m = 2 * n; m <= 14; ++m) {
            const KneserParams p(m, n);
            const Coloring s = standard_proper_coloring(p);
            CHECK(s.color_count() == chromatic_number(p));
            // exhaustive edge check, independent of the verifier
            bool proper = true;
            std::uint64_t i = 0;
            for (VertexSet a : iterate_subsets(m, n)) {
                std::uint64_t j = 0;
                for (VertexSet b : iterate_subsets(m, n)) {
                    if (j > i && a.disjoint(b) && s.label_at(i) == s.label_at(j)) proper = false;
                    ++j;
                }
                ++i;
            }
            CHECK(proper);
            CHECK(is_proper(s).proper);
        }
    }
}
