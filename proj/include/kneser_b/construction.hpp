#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "kneser_b/coloring.hpp"
#include "kneser_b/combinatorics.hpp"
#include "kneser_b/kneser.hpp"

namespace kneser_b {

// X = {0, ..., r-1}, Y = {r, ..., 2r-1} with r = floor(m/2). For odd m the
// last element m-1 lies in neither half.
struct HalfSplit {
    unsigned r = 0;
    VertexSet x;
    VertexSet y;

    explicit HalfSplit(unsigned m);
};

// f(x) = r + x, a bijection X -> Y. Throws std::invalid_argument off-domain.
unsigned bijection_f(unsigned x, const HalfSplit& split);
unsigned bijection_f_inverse(unsigned y, const HalfSplit& split);
// Elementwise images of subsets of X (resp. Y).
VertexSet map_f(VertexSet subset_of_x, const HalfSplit& split);
VertexSet map_f_inverse(VertexSet subset_of_y, const HalfSplit& split);

// Extends an s-subset A of [r] by the elements min A + 1, min A + 2, ...
// (mod r) until it has 2s elements. Disjoint inputs get distinct images.
// Requires r >= 2s+1; throws std::invalid_argument otherwise.
VertexSet g_map(VertexSet a, unsigned r, unsigned s);

// F plus the smallest elements of side \ F until the result has n elements.
VertexSet pad_to_n(VertexSet forced, VertexSet side, unsigned n);

enum class ConstructionKind { small, case1, case2, case3 };
std::string_view to_string(ConstructionKind kind);

// Which rule labeled each vertex. Filled when a trace is passed to a builder.
enum class Rule : std::uint8_t {
    identity_x,        // A inside X
    identity_y,        // A inside Y
    heavy_x,           // A mostly in X, Y-side label
    heavy_y,           // A mostly in Y, X-side label
    balanced_matched,  // A∩X = f^-1(A∩Y), label g(A∩X)
    balanced_to_y,     // min of the symmetric difference lies in A∩X
    balanced_to_x,     // min of the symmetric difference lies in f^-1(A∩Y)
    top_block,         // odd m: vertex contains m-1
    small_split,       // m = 2n: label by membership of element 0
    small_extracted,   // m = 2n+1: extracted from the standard coloring
    count_
};

struct ConstructionTrace {
    std::array<std::uint64_t, static_cast<std::size_t>(Rule::count_)> rule_hits{};
    // Vertices for which zero or several rule predicates held.
    std::uint64_t coverage_violations = 0;

    std::uint64_t hits(Rule r) const { return rule_hits[static_cast<std::size_t>(r)]; }
    std::uint64_t total() const;
};

// Builders. `threads` = 0 uses every hardware thread; the result does not
// depend on it. Each throws std::invalid_argument on the wrong parity or
// range, and std::logic_error if some vertex is not matched by exactly one
// rule.
Coloring build_case1(const KneserParams& p, unsigned threads = 0, ConstructionTrace* trace = nullptr);
Coloring build_case2(const KneserParams& p, unsigned threads = 0, ConstructionTrace* trace = nullptr);
Coloring build_case3(const KneserParams& p, unsigned threads = 0, ConstructionTrace* trace = nullptr);
Coloring build_small_case(const KneserParams& p, ConstructionTrace* trace = nullptr);

// Which builder `build` dispatches to. Throws std::domain_error for n < 3.
ConstructionKind construction_kind(const KneserParams& p);

// A b-coloring of KG(m,n), n >= 3, with 2*C(floor(m/2), n) labels for even
// m >= 2n+2, one more for odd m >= 2n+2, and 2 or 3 labels when m <= 2n+1.
Coloring build(const KneserParams& p, unsigned threads = 0, ConstructionTrace* trace = nullptr);

// 2*C(floor(m/2), n)
std::uint64_t theorem_lower_bound(const KneserParams& p);

}  // namespace kneser_b
