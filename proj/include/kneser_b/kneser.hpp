#pragma once

#include <cstdint>
#include <vector>

#include "kneser_b/combinatorics.hpp"

namespace kneser_b {

class Coloring;

// KG(m, n): vertices are the n-subsets of [m], adjacent iff disjoint.
struct KneserParams {
    unsigned m = 0;
    unsigned n = 0;

    // Throws std::invalid_argument unless 1 <= n, 2n <= m <= 64.
    KneserParams(unsigned m_, unsigned n_);

    std::uint64_t vertex_count() const { return small_binomial(m, n); }
    VertexSet ground() const { return VertexSet::interval(0, m); }
    // Valid vertex of this graph.
    bool is_vertex(VertexSet a) const { return a.size() == n && a.within(m); }

    friend bool operator==(const KneserParams&, const KneserParams&) = default;
};

constexpr bool adjacent(VertexSet a, VertexSet b) { return a.disjoint(b); }

// Visits every n-subset of the complement of `a` within [m], in colex order.
template <typename Fn>
void for_each_neighbor(VertexSet a, const KneserParams& p, Fn&& fn) {
    const VertexSet complement = p.ground() - a;
    unsigned pool[kMaxGround];
    unsigned k = 0;
    for (unsigned e : complement.elements()) pool[k++] = e;
    const unsigned n = p.n;
    if (n > k) return;
    // idx holds positions into pool, strictly increasing.
    unsigned idx[kMaxGround];
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (unsigned i = 0; i < n; ++i) bits |= std::uint64_t{1} << pool[idx[i]];
        fn(VertexSet::from_bits(bits));
        // colex successor on positions: bump the lowest index that can move
        unsigned i = 0;
        while (i < n && idx[i] + 1 == (i + 1 < n ? idx[i + 1] : k)) ++i;
        if (i == n) return;
        ++idx[i];
        for (unsigned j = 0; j < i; ++j) idx[j] = j;
    }
}

// Same enumeration, reporting colex ranks of the neighbors instead of sets.
template <typename Fn>
void for_each_neighbor_rank(VertexSet a, const KneserParams& p, Fn&& fn) {
    const VertexSet complement = p.ground() - a;
    unsigned pool[kMaxGround];
    unsigned k = 0;
    for (unsigned e : complement.elements()) pool[k++] = e;
    const unsigned n = p.n;
    if (n > k) return;
    unsigned idx[kMaxGround];
    // term[i] = C(pool[idx[i]], i+1)
    std::uint64_t term[kMaxGround];
    std::uint64_t sum = 0;
    for (unsigned i = 0; i < n; ++i) {
        idx[i] = i;
        term[i] = small_binomial(pool[i], i + 1);
        sum += term[i];
    }
    while (true) {
        fn(sum);
        unsigned i = 0;
        while (i < n && idx[i] + 1 == (i + 1 < n ? idx[i + 1] : k)) ++i;
        if (i == n) return;
        ++idx[i];
        sum -= term[i];
        term[i] = small_binomial(pool[idx[i]], i + 1);
        sum += term[i];
        for (unsigned j = 0; j < i; ++j) {
            sum -= term[j];
            idx[j] = j;
            term[j] = small_binomial(pool[j], j + 1);
            sum += term[j];
        }
    }
}

std::vector<VertexSet> neighbors(VertexSet a, const KneserParams& p);

// C(m-n, n); KG(m,n) is regular.
std::uint64_t max_degree(const KneserParams& p);

// m - 2n + 2
std::uint64_t chromatic_number(const KneserParams& p);

// The folklore optimal coloring: synthetic label i for vertices with minimum
// element i < m-2n+1, and label m-2n+1 for every vertex inside the last 2n-1
// elements (pairwise intersecting by pigeonhole).
Coloring standard_proper_coloring(const KneserParams& p);

}  // namespace kneser_b
