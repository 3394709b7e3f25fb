#include "kneser_b/kneser.hpp"

#include <stdexcept>
#include <string>

#include "kneser_b/coloring.hpp"

namespace kneser_b {

KneserParams::KneserParams(unsigned m_, unsigned n_) : m(m_), n(n_) {
    if (n < 1) throw std::invalid_argument("KG(m,n) requires n >= 1");
    if (m < 2 * n)
        throw std::invalid_argument("KG(" + std::to_string(m) + "," + std::to_string(n) + ") requires m >= 2n");
    if (m > kMaxGround) throw std::invalid_argument("ground set limited to m <= 64");
}

std::vector<VertexSet> neighbors(VertexSet a, const KneserParams& p) {
    std::vector<VertexSet> out;
    out.reserve(max_degree(p));
    for_each_neighbor(a, p, [&](VertexSet b) { out.push_back(b); });
    return out;
}

std::uint64_t max_degree(const KneserParams& p) { return small_binomial(p.m - p.n, p.n); }

std::uint64_t chromatic_number(const KneserParams& p) { return p.m - 2 * p.n + 2; }

Coloring standard_proper_coloring(const KneserParams& p) {
    const unsigned last = p.m - 2 * p.n + 1;
    std::vector<ColorLabel> labels;
    labels.reserve(p.vertex_count());
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        const unsigned lo = a.min();
        labels.push_back(ColorLabel::synthetic(lo < last ? lo : last));
    }
    return Coloring(p, std::move(labels));
}

}  // namespace kneser_b
