#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kneser_b/coloring.hpp"

namespace kneser_b {

struct ProperResult {
    bool proper = true;
    // A disjoint pair sharing a label; the smallest such pair in colex order.
    std::optional<std::pair<VertexSet, VertexSet>> counterexample;

    explicit operator bool() const { return proper; }
};

struct ClassReport {
    ColorLabel label;
    std::uint64_t size = 0;
    std::uint64_t dominating_count = 0;
    // The first dominating vertices in colex order, at most max_witnesses.
    std::vector<VertexSet> dominating_witnesses;

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct VerificationReport {
    unsigned m = 0;
    unsigned n = 0;
    bool proper = false;
    std::optional<std::pair<VertexSet, VertexSet>> counterexample;
    std::vector<ClassReport> classes;  // sorted by label
    std::uint64_t color_count = 0;
    std::uint64_t bound_lower = 0;  // 2*C(floor(m/2), n)
    std::uint64_t bound_upper = 0;  // max degree + 1
    bool is_b = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
    std::size_t max_witnesses = 16;
    unsigned threads = 0;
};

// Scans each vertex's neighborhood; never enumerates all vertex pairs.
ProperResult is_proper(const Coloring& c, unsigned threads = 0);

// Every vertex of the class of `label` that sees all other labels among its
// neighbors. Throws std::invalid_argument when the label is not used.
std::vector<VertexSet> dominating_vertices(const Coloring& c, ColorLabel label, unsigned threads = 0);

VerificationReport is_b_coloring(const Coloring& c, const VerifyOptions& options = {});

}  // namespace kneser_b
