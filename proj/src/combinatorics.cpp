#include "kneser_b/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace kneser_b {

VertexSet::VertexSet(std::initializer_list<unsigned> elements) {
    for (unsigned e : elements) {
        if (e >= kMaxGround) throw std::invalid_argument("element " + std::to_string(e) + " outside ground set");
        bits |= std::uint64_t{1} << e;
    }
}

VertexSet VertexSet::from_elements(const std::vector<unsigned>& elements) {
    VertexSet s;
    for (unsigned e : elements) {
        if (e >= kMaxGround) throw std::invalid_argument("element " + std::to_string(e) + " outside ground set");
        s.bits |= std::uint64_t{1} << e;
    }
    return s;
}

std::vector<unsigned> VertexSet::elements() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    return out;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (a <= kMaxGround) return small_binomial(static_cast<unsigned>(a), static_cast<unsigned>(b));
    const std::uint64_t k = std::min(b, a - b);
    // Each partial product is C(a-k+i, i), nondecreasing up to the result.
    __extension__ using wide = unsigned __int128;
    wide r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (a - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

SubsetRank rank(VertexSet a, unsigned n) {
    if (a.size() != n)
        throw std::invalid_argument("rank: set has " + std::to_string(a.size()) + " elements, expected " +
                                    std::to_string(n));
    return SubsetRank{rank_unchecked(a)};
}

VertexSet unrank(SubsetRank r, unsigned m, unsigned n) {
    if (n > m || m > kMaxGround) throw std::invalid_argument("unrank: need n <= m <= 64");
    if (r.index >= small_binomial(m, n))
        throw std::invalid_argument("unrank: index " + std::to_string(r.index) + " out of range");
    VertexSet out;
    std::uint64_t rest = r.index;
    unsigned c = m;
    for (unsigned i = n; i >= 1; --i) {
        // largest c with C(c, i) <= rest
        do {
            --c;
        } while (small_binomial(c, i) > rest);
        out.bits |= std::uint64_t{1} << c;
        rest -= small_binomial(c, i);
    }
    return out;
}

SubsetRange::SubsetRange(unsigned m, unsigned n) {
    if (n > m || m > kMaxGround) throw std::invalid_argument("iterate_subsets: need n <= m <= 64");
    first_ = VertexSet::interval(0, n);
    count_ = small_binomial(m, n);
}

SubsetRange::SubsetRange(unsigned m, unsigned n, std::uint64_t first, std::uint64_t count) {
    if (n > m || m > kMaxGround) throw std::invalid_argument("iterate_subsets: need n <= m <= 64");
    const std::uint64_t total = small_binomial(m, n);
    if (first > total || count > total - first) throw std::invalid_argument("iterate_subsets: rank range out of bounds");
    count_ = count;
    if (count > 0) first_ = unrank(SubsetRank{first}, m, n);
}

}  // namespace kneser_b
