#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "kneser_b/coloring.hpp"
#include "kneser_b/kneser.hpp"

namespace kneser_b {

// Closed form for the b-chromatic number of KG(m,2):
//   odd m:  floor(m(m-1)/6)
//   even m: floor((m-1)(m-2)/6) + 3
// std::nullopt for the excluded value m = 8. Throws std::invalid_argument
// for m < 4.
std::optional<std::uint64_t> theorem_a_formula(unsigned m);

// Repeatedly removes the smallest class without a dominating vertex (ties:
// smallest label) by moving each of its vertices to the smallest label
// missing from that vertex's neighborhood. Properness is kept at every step.
// Throws std::invalid_argument when the input is not proper.
Coloring extract_b_coloring(const Coloring& proper_coloring, unsigned threads = 0);

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000;
    std::chrono::milliseconds max_time{std::chrono::minutes(5)};
    // Refuse graphs with more vertices than this.
    std::uint64_t vertex_cap = 30;
};

struct ExactResult {
    // Set when every t above the answer was refuted and t itself was found.
    std::optional<std::uint64_t> exact;
    // Certified interval; lower == upper == *exact when exact is set.
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    // A b-coloring with `lower` synthetic labels.
    std::optional<Coloring> witness;
};

// Thrown when a request exceeds a configured size cap.
class RefusedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact b-chromatic number by backtracking, trying t = min(D+1, |V|) downward.
// Throws RefusedError when C(m,n) exceeds budget.vertex_cap (at most 64).
ExactResult exact_b_chromatic(const KneserParams& p, const SearchBudget& budget = {});

struct Bounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
};

// lower: 2*C(floor(m/2), n) for n >= 3, the closed form for n = 2 where it is
// consistent, otherwise the chromatic number. upper: max degree + 1.
Bounds bounds(const KneserParams& p);

}  // namespace kneser_b
