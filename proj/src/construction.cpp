#include "kneser_b/construction.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kneser_b/parallel.hpp"
#include "kneser_b/solver.hpp"

namespace kneser_b {

HalfSplit::HalfSplit(unsigned m)
    : r(m / 2), x(VertexSet::interval(0, m / 2)), y(VertexSet::interval(m / 2, m / 2)) {}

unsigned bijection_f(unsigned x, const HalfSplit& split) {
    if (x >= split.r) throw std::invalid_argument("f: " + std::to_string(x) + " is not in X");
    return split.r + x;
}

unsigned bijection_f_inverse(unsigned y, const HalfSplit& split) {
    if (y < split.r || y >= 2 * split.r) throw std::invalid_argument("f^-1: " + std::to_string(y) + " is not in Y");
    return y - split.r;
}

VertexSet map_f(VertexSet subset_of_x, const HalfSplit& split) {
    if (!subset_of_x.subset_of(split.x)) throw std::invalid_argument("f: set is not inside X");
    return VertexSet::from_bits(subset_of_x.bits << split.r);
}

VertexSet map_f_inverse(VertexSet subset_of_y, const HalfSplit& split) {
    if (!subset_of_y.subset_of(split.y)) throw std::invalid_argument("f^-1: set is not inside Y");
    return VertexSet::from_bits(subset_of_y.bits >> split.r);
}

VertexSet g_map(VertexSet a, unsigned r, unsigned s) {
    if (s < 1 || r < 2 * s + 1)
        throw std::invalid_argument("g_map requires s >= 1 and r >= 2s+1 (r=" + std::to_string(r) +
                                    ", s=" + std::to_string(s) + ")");
    if (a.size() != s || !a.within(r)) throw std::invalid_argument("g_map: argument must be an s-subset of [r]");
    VertexSet out = a;
    const unsigned start = a.min();
    for (unsigned d = 1; out.size() < 2 * s; ++d) out.bits |= std::uint64_t{1} << ((start + d) % r);
    return out;
}

VertexSet pad_to_n(VertexSet forced, VertexSet side, unsigned n) {
    if (!forced.subset_of(side)) throw std::invalid_argument("pad_to_n: forced set is not inside the side");
    if (forced.size() > n) throw std::invalid_argument("pad_to_n: forced set already exceeds n");
    if (side.size() < n) throw std::invalid_argument("pad_to_n: side has fewer than n elements");
    VertexSet out = forced;
    for (std::uint64_t spare = (side - forced).bits; out.size() < n; spare &= spare - 1)
        out.bits |= spare & (~spare + 1);
    return out;
}

std::string_view to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::small: return "small";
        case ConstructionKind::case1: return "case1";
        case ConstructionKind::case2: return "case2";
        case ConstructionKind::case3: return "case3";
    }
    return "unknown";
}

std::uint64_t ConstructionTrace::total() const {
    return std::accumulate(rule_hits.begin(), rule_hits.end(), std::uint64_t{0});
}

std::uint64_t theorem_lower_bound(const KneserParams& p) { return 2 * small_binomial(p.m / 2, p.n); }

namespace {

struct Labeled {
    ColorLabel label;
    Rule rule;
    unsigned matches;
};

// The even-m labeling shared by both parities of n. Every predicate is
// evaluated so that overlapping or missing rules show up in `matches`.
Labeled label_even(VertexSet a, const HalfSplit& split, unsigned n) {
    const unsigned s = n / 2;
    const bool odd_n = (n % 2) == 1;
    const VertexSet ax = a & split.x;
    const VertexSet ay = a & split.y;
    const unsigned kx = ax.size();
    const unsigned ky = ay.size();
    // for odd n the heavy range is s+1..2s inclusive; for even n it stops below 2s
    const unsigned heavy_hi = odd_n ? 2 * s : 2 * s - 1;

    Labeled out{ColorLabel{}, Rule::count_, 0};
    auto hit = [&](Rule r, VertexSet label) {
        if (out.matches++ == 0) {
            out.rule = r;
            out.label = ColorLabel::subset(label);
        }
    };

    if (a.subset_of(split.x)) hit(Rule::identity_x, a);
    if (a.subset_of(split.y)) hit(Rule::identity_y, a);
    if (kx >= s + 1 && kx <= heavy_hi) hit(Rule::heavy_x, pad_to_n(map_f(ax, split) | ay, split.y, n));
    if (ky >= s + 1 && ky <= heavy_hi) hit(Rule::heavy_y, pad_to_n(ax | map_f_inverse(ay, split), split.x, n));
    if (!odd_n && kx == s && ky == s) {
        const VertexSet mirrored = map_f_inverse(ay, split);
        if (ax == mirrored) {
            hit(Rule::balanced_matched, g_map(ax, split.r, s));
        } else {
            const VertexSet diff = ax ^ mirrored;
            if (ax.contains(diff.min()))
                hit(Rule::balanced_to_y, pad_to_n(map_f(ax, split) | ay, split.y, n));
            if (mirrored.contains(diff.min()))
                hit(Rule::balanced_to_x, pad_to_n(ax | mirrored, split.x, n));
        }
    }
    return out;
}

void check_even_params(const KneserParams& p, bool want_odd_n, const char* name) {
    if (p.m % 2 != 0) throw std::invalid_argument(std::string(name) + " requires even m");
    if ((p.n % 2 == 1) != want_odd_n)
        throw std::invalid_argument(std::string(name) + (want_odd_n ? " requires odd n" : " requires even n"));
    if (p.m < 2 * p.n + 2) throw std::invalid_argument(std::string(name) + " requires m >= 2n+2");
}

// Labels ranks [0, count) of KG(m_even, n) into out[0..count).
void fill_even(unsigned m_even, unsigned n, std::vector<ColorLabel>& out, unsigned threads,
               ConstructionTrace* trace) {
    const HalfSplit split(m_even);
    const std::uint64_t count = small_binomial(m_even, n);
    std::mutex merge;
    ConstructionTrace total;
    parallel_for(count, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        ConstructionTrace local;
        std::uint64_t i = begin;
        for (VertexSet a : SubsetRange(m_even, n, begin, end - begin)) {
            const Labeled l = label_even(a, split, n);
            if (l.matches != 1) {
                ++local.coverage_violations;
            } else {
                ++local.rule_hits[static_cast<std::size_t>(l.rule)];
            }
            out[i++] = l.label;
        }
        std::lock_guard lock(merge);
        for (std::size_t r = 0; r < total.rule_hits.size(); ++r) total.rule_hits[r] += local.rule_hits[r];
        total.coverage_violations += local.coverage_violations;
    });
    if (trace) {
        for (std::size_t r = 0; r < total.rule_hits.size(); ++r) trace->rule_hits[r] += total.rule_hits[r];
        trace->coverage_violations += total.coverage_violations;
    }
    if (total.coverage_violations != 0)
        throw std::logic_error("construction rules do not partition the vertices of KG(" + std::to_string(m_even) +
                               "," + std::to_string(n) + "): " + std::to_string(total.coverage_violations) +
                               " vertices matched zero or several rules");
}

}  // namespace

Coloring build_case1(const KneserParams& p, unsigned threads, ConstructionTrace* trace) {
    check_even_params(p, true, "build_case1");
    std::vector<ColorLabel> labels(p.vertex_count());
    fill_even(p.m, p.n, labels, threads, trace);
    return Coloring(p, std::move(labels));
}

Coloring build_case2(const KneserParams& p, unsigned threads, ConstructionTrace* trace) {
    check_even_params(p, false, "build_case2");
    std::vector<ColorLabel> labels(p.vertex_count());
    fill_even(p.m, p.n, labels, threads, trace);
    return Coloring(p, std::move(labels));
}

Coloring build_case3(const KneserParams& p, unsigned threads, ConstructionTrace* trace) {
    if (p.m % 2 == 0) throw std::invalid_argument("build_case3 requires odd m");
    if (p.m < 2 * p.n + 2) throw std::invalid_argument("build_case3 requires m >= 2n+2");
    std::vector<ColorLabel> labels(p.vertex_count());
    // Colex order lists the subsets of [m-1] first, so the even coloring
    // occupies exactly the leading ranks.
    fill_even(p.m - 1, p.n, labels, threads, trace);
    const ColorLabel top = ColorLabel::subset(VertexSet::interval(p.m - p.n, p.n));
    const std::uint64_t first_top = small_binomial(p.m - 1, p.n);
    for (std::uint64_t i = first_top; i < labels.size(); ++i) labels[i] = top;
    if (trace) trace->rule_hits[static_cast<std::size_t>(Rule::top_block)] += labels.size() - first_top;
    return Coloring(p, std::move(labels));
}

Coloring build_small_case(const KneserParams& p, ConstructionTrace* trace) {
    if (p.m == 2 * p.n) {
        std::vector<ColorLabel> labels;
        labels.reserve(p.vertex_count());
        for (VertexSet a : iterate_subsets(p.m, p.n)) labels.push_back(ColorLabel::synthetic(a.contains(0) ? 0 : 1));
        if (trace) trace->rule_hits[static_cast<std::size_t>(Rule::small_split)] += labels.size();
        return Coloring(p, std::move(labels));
    }
    if (p.m == 2 * p.n + 1) {
        Coloring out = extract_b_coloring(standard_proper_coloring(p));
        if (trace) trace->rule_hits[static_cast<std::size_t>(Rule::small_extracted)] += p.vertex_count();
        return out;
    }
    throw std::invalid_argument("build_small_case requires m = 2n or m = 2n+1");
}

ConstructionKind construction_kind(const KneserParams& p) {
    if (p.n < 3)
        throw std::domain_error("the construction covers n >= 3; for n = 2 use the closed-form value (bounds/brute)");
    if (p.m <= 2 * p.n + 1) return ConstructionKind::small;
    if (p.m % 2 == 1) return ConstructionKind::case3;
    return p.n % 2 == 1 ? ConstructionKind::case1 : ConstructionKind::case2;
}

Coloring build(const KneserParams& p, unsigned threads, ConstructionTrace* trace) {
    switch (construction_kind(p)) {
        case ConstructionKind::small: return build_small_case(p, trace);
        case ConstructionKind::case1: return build_case1(p, threads, trace);
        case ConstructionKind::case2: return build_case2(p, threads, trace);
        case ConstructionKind::case3: return build_case3(p, threads, trace);
    }
    throw std::logic_error("unreachable construction kind");
}

}  // namespace kneser_b
