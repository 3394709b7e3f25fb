#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kneser_b/combinatorics.hpp"
#include "kneser_b/kneser.hpp"

namespace kneser_b {

// A color is either an n-subset of [m] (the self-labeling construction) or a
// plain integer. Subset labels order before synthetic ones; subsets compare
// colexicographically.
struct ColorLabel {
    enum class Kind : std::uint8_t { subset = 0, synthetic = 1 };

    Kind kind = Kind::synthetic;
    std::uint64_t value = 0;

    static constexpr ColorLabel subset(VertexSet s) { return ColorLabel{Kind::subset, s.bits}; }
    static constexpr ColorLabel synthetic(std::uint64_t k) { return ColorLabel{Kind::synthetic, k}; }

    constexpr bool is_subset() const { return kind == Kind::subset; }
    constexpr VertexSet as_subset() const { return VertexSet::from_bits(value); }

    friend constexpr bool operator==(ColorLabel, ColorLabel) = default;
    friend constexpr std::strong_ordering operator<=>(ColorLabel a, ColorLabel b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.value <=> b.value;
    }
};

std::string to_string(ColorLabel label);
std::string to_string(VertexSet s);

// Total map from the vertices of KG(m,n) to labels, indexed by colex rank.
class Coloring {
public:
    Coloring(KneserParams params, std::vector<ColorLabel> assignment);

    const KneserParams& params() const { return params_; }
    const std::vector<ColorLabel>& assignment() const { return assignment_; }

    ColorLabel label_at(std::uint64_t rank_index) const { return assignment_[rank_index]; }
    ColorLabel label_of(VertexSet v) const;

    // Sorted distinct labels.
    std::vector<ColorLabel> labels() const;
    std::size_t color_count() const { return labels().size(); }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    KneserParams params_;
    std::vector<ColorLabel> assignment_;
};

}  // namespace kneser_b
