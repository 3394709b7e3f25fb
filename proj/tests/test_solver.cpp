#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "kneser_b/construction.hpp"
#include "kneser_b/solver.hpp"
#include "kneser_b/verify.hpp"

using namespace kneser_b;

TEST_CASE("closed form for n = 2") {
    CHECK(theorem_a_formula(5) == 3u);   // floor(20/6)
    CHECK(theorem_a_formula(6) == 6u);   // floor(20/6) + 3
    CHECK(theorem_a_formula(7) == 7u);   // floor(42/6)
    CHECK(theorem_a_formula(9) == 12u);  // floor(72/6)
    CHECK(theorem_a_formula(10) == 15u); // floor(72/6) + 3
    CHECK_FALSE(theorem_a_formula(8).has_value());
    CHECK_THROWS_AS(theorem_a_formula(3), std::invalid_argument);
}

TEST_CASE("extraction leaves b-colorings unchanged") {
    for (const auto& [m, n] : std::vector<std::pair<unsigned, unsigned>>{{10, 3}, {11, 3}, {6, 3}, {12, 4}}) {
        const Coloring c = build(KneserParams(m, n));
        CHECK(extract_b_coloring(c) == c);
    }
}

TEST_CASE("extraction from the standard coloring of KG(7,3)") {
    const Coloring b = extract_b_coloring(standard_proper_coloring(KneserParams(7, 3)));
    const VerificationReport r = is_b_coloring(b);
    CHECK(r.is_b);
    CHECK(r.color_count == 3);
}

TEST_CASE("extraction dissolves witness-less classes and stays above chi") {
    // Petersen with {0,1} split off as its own class: that class is dissolved.
    const KneserParams p(5, 2);
    std::vector<ColorLabel> labels = standard_proper_coloring(p).assignment();
    labels[0] = ColorLabel::synthetic(9);
    const Coloring start(p, labels);
    const Coloring out = extract_b_coloring(start);
    const VerificationReport r = is_b_coloring(out);
    CHECK(r.is_b);
    CHECK(r.color_count <= 4);
    CHECK(r.color_count >= chromatic_number(p));
    CHECK(out.label_of(VertexSet{0, 1}) != ColorLabel::synthetic(9));

    // one color per vertex on a larger graph: many rounds, count never increases
    const KneserParams q(7, 2);
    std::vector<ColorLabel> rainbow;
    for (std::uint64_t i = 0; i < q.vertex_count(); ++i) rainbow.push_back(ColorLabel::synthetic(i));
    const Coloring extracted = extract_b_coloring(Coloring(q, rainbow));
    const VerificationReport rq = is_b_coloring(extracted);
    CHECK(rq.is_b);
    CHECK(rq.color_count <= rq.bound_upper);
    CHECK(rq.color_count >= chromatic_number(q));
}

TEST_CASE("extraction rejects improper input") {
    const KneserParams p(5, 2);
    const Coloring constant(p, std::vector<ColorLabel>(p.vertex_count(), ColorLabel::synthetic(0)));
    CHECK_THROWS_AS(extract_b_coloring(constant), std::invalid_argument);
}

TEST_CASE("exact b-chromatic number at desk scale") {
    const ExactResult k42 = exact_b_chromatic(KneserParams(4, 2));
    CHECK(k42.exact == 2u);

    const ExactResult petersen = exact_b_chromatic(KneserParams(5, 2));
    REQUIRE(petersen.exact);
    CHECK(*petersen.exact == 3);
    REQUIRE(petersen.witness);
    CHECK(is_b_coloring(*petersen.witness).is_b);
    CHECK(is_b_coloring(*petersen.witness).color_count == 3);

    // KG(m,1) is complete: every vertex needs its own color
    CHECK(exact_b_chromatic(KneserParams(6, 1)).exact == 6u);
    CHECK(exact_b_chromatic(KneserParams(6, 3)).exact == 2u);
    // 35 vertices, above the default cap. The extracted coloring has 3
    // classes but a 5-class b-coloring exists, and 5 = D+1.
    SearchBudget wide;
    wide.vertex_cap = 35;
    const ExactResult k73 = exact_b_chromatic(KneserParams(7, 3), wide);
    CHECK(k73.exact == 5u);
    REQUIRE(k73.witness);
    CHECK(is_b_coloring(*k73.witness).is_b);
    CHECK(is_b_coloring(*k73.witness).color_count == 5);
}

TEST_CASE("exact search respects the vertex cap and the budget") {
    CHECK_THROWS_AS(exact_b_chromatic(KneserParams(9, 2)), RefusedError);

    SearchBudget tiny;
    tiny.max_nodes = 5;
    const ExactResult r = exact_b_chromatic(KneserParams(6, 2), tiny);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.exact);
    CHECK(r.lower <= 6);
    CHECK(r.upper >= 6);
    REQUIRE(r.witness);
    CHECK(is_b_coloring(*r.witness).color_count == r.lower);
}

TEST_CASE("bounds") {
    const Bounds b103 = bounds(KneserParams(10, 3));
    CHECK(b103.lower == 20);
    CHECK(b103.upper == 36);
    const Bounds b63 = bounds(KneserParams(6, 3));
    CHECK(b63.lower == 2);
    CHECK(b63.upper == 2);
    const Bounds b52 = bounds(KneserParams(5, 2));
    CHECK(b52.lower == 3);
    CHECK(b52.upper == 4);
    // the closed form gives 4 at m = 4, above D+1 = 2
    CHECK(bounds(KneserParams(4, 2)).lower == 2);
    CHECK(bounds(KneserParams(8, 2)).lower == chromatic_number(KneserParams(8, 2)));

    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned m = 2 * n; m <= 64; ++m) {
            const Bounds b = bounds(KneserParams(m, n));
            CHECK(b.lower <= b.upper);
        }
    }
}

TEST_CASE("exact values sit inside the bounds and above the construction") {
    for (const auto& [m, n] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {5, 2}, {6, 3}, {7, 3}, {6, 1}}) {
        const KneserParams p(m, n);
        SearchBudget wide;
        wide.vertex_cap = 35;
        const ExactResult r = exact_b_chromatic(p, wide);
        REQUIRE(r.exact);
        const Bounds b = bounds(p);
        CHECK(b.lower <= *r.exact);
        CHECK(*r.exact <= b.upper);
        if (n >= 3) CHECK(build(p).color_count() <= *r.exact);
    }
}
