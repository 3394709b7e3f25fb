#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace kneser_b {

inline constexpr unsigned kMaxGround = 64;

// An n-subset of the ground set [m] = {0, ..., m-1}, one bit per element.
// Integer comparison of the masks is exactly colexicographic order.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    // Element list, e.g. VertexSet{0, 2, 5}.
    VertexSet(std::initializer_list<unsigned> elements);

    static constexpr VertexSet from_bits(std::uint64_t b) {
        VertexSet s;
        s.bits = b;
        return s;
    }

    static VertexSet from_elements(const std::vector<unsigned>& elements);
    // {first, first+1, ..., first+count-1}
    static constexpr VertexSet interval(unsigned first, unsigned count) {
        if (count == 0) return VertexSet{};
        const std::uint64_t run = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
        return from_bits(run << first);
    }

    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits)); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(unsigned i) const { return i < 64 && ((bits >> i) & 1u) != 0; }
    constexpr bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
    constexpr bool disjoint(VertexSet other) const { return (bits & other.bits) == 0; }
    // Smallest / largest element; undefined on the empty set.
    constexpr unsigned min() const { return static_cast<unsigned>(std::countr_zero(bits)); }
    constexpr unsigned max() const { return 63u - static_cast<unsigned>(std::countl_zero(bits)); }
    // True when no element is >= m.
    constexpr bool within(unsigned m) const { return m >= 64 || (bits >> m) == 0; }

    std::vector<unsigned> elements() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits & b.bits); }
    // Symmetric difference.
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits ^ b.bits); }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits & ~b.bits); }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

// Position of a subset in colexicographic order among all n-subsets.
struct SubsetRank {
    std::uint64_t index = 0;
    friend constexpr bool operator==(SubsetRank, SubsetRank) = default;
    friend constexpr auto operator<=>(SubsetRank, SubsetRank) = default;
};

// Exact C(a, b), zero when b > a. Throws std::overflow_error when the value
// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

namespace detail {
struct BinomialTable {
    std::uint64_t v[kMaxGround + 1][kMaxGround + 1];
};
// Every C(a, b) with a <= 64 fits in 64 bits (max is C(64,32) < 2^61).
constexpr BinomialTable make_binomial_table() {
    BinomialTable t{};
    for (unsigned a = 0; a <= kMaxGround; ++a) {
        t.v[a][0] = 1;
        for (unsigned b = 1; b <= a; ++b) t.v[a][b] = t.v[a - 1][b - 1] + (b <= a - 1 ? t.v[a - 1][b] : 0);
    }
    return t;
}
inline constexpr BinomialTable kBinomial = make_binomial_table();
}  // namespace detail

// Table lookup for a, b <= 64; no checks.
constexpr std::uint64_t small_binomial(unsigned a, unsigned b) { return detail::kBinomial.v[a][b]; }

// Colex rank: sum over the i-th smallest element a_i of C(a_i, i+1).
SubsetRank rank(VertexSet a, unsigned n);
VertexSet unrank(SubsetRank r, unsigned m, unsigned n);

// Unchecked rank for hot loops; caller guarantees the set is valid.
constexpr std::uint64_t rank_unchecked(VertexSet a) {
    std::uint64_t r = 0;
    unsigned i = 1;
    for (std::uint64_t b = a.bits; b != 0; b &= b - 1, ++i)
        r += small_binomial(static_cast<unsigned>(std::countr_zero(b)), i);
    return r;
}

// Gosper's successor: next n-subset in colex order. Requires a nonempty set
// that is not the last one of its size below bit 64.
constexpr VertexSet next_subset(VertexSet a) {
    const std::uint64_t x = a.bits;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return VertexSet::from_bits((((r ^ x) >> 2) / c) | r);
}

// All n-subsets of [m] in colex order, as a forward range.
class SubsetRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexSet;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexSet*;
        using reference = const VertexSet&;

        iterator() = default;
        iterator(VertexSet current, std::uint64_t remaining) : current_(current), remaining_(remaining) {}

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++() {
            if (--remaining_ > 0) current_ = next_subset(current_);
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.remaining_ == b.remaining_; }

    private:
        VertexSet current_{};
        std::uint64_t remaining_ = 0;
    };

    SubsetRange(unsigned m, unsigned n);
    // The subrange of ranks [first, first+count).
    SubsetRange(unsigned m, unsigned n, std::uint64_t first, std::uint64_t count);

    iterator begin() const { return {first_, count_}; }
    iterator end() const { return {VertexSet{}, 0}; }
    std::uint64_t size() const { return count_; }

private:
    VertexSet first_{};
    std::uint64_t count_ = 0;
};

inline SubsetRange iterate_subsets(unsigned m, unsigned n) { return SubsetRange(m, n); }

}  // namespace kneser_b
