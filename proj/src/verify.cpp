#include "kneser_b/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kneser_b/kneser.hpp"
#include "kneser_b/parallel.hpp"

namespace kneser_b {

namespace {

struct DenseLabels {
    std::vector<ColorLabel> labels;  // sorted distinct
    std::vector<std::uint32_t> id;   // per vertex rank
};

DenseLabels densify(const Coloring& c) {
    DenseLabels d;
    d.labels = c.labels();
    if (d.labels.size() > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("too many labels");
    d.id.resize(c.assignment().size());
    for (std::size_t i = 0; i < d.id.size(); ++i) {
        const auto it = std::lower_bound(d.labels.begin(), d.labels.end(), c.assignment()[i]);
        d.id[i] = static_cast<std::uint32_t>(it - d.labels.begin());
    }
    return d;
}

struct Scan {
    bool proper = true;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;  // ranks
    std::vector<std::uint8_t> dominating;                             // per vertex
};

// One pass over every neighborhood: properness and per-vertex domination.
// Domination counts distinct labels other than the vertex's own among its
// neighbors, using a per-worker stamp array indexed by label id.
Scan scan(const Coloring& c, const DenseLabels& d, bool want_domination, unsigned threads) {
    const KneserParams& p = c.params();
    const std::uint64_t count = p.vertex_count();
    const std::size_t label_count = d.labels.size();
    Scan out;
    if (want_domination) out.dominating.assign(count, 0);

    const unsigned workers = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), count)));
    std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> first_violation(workers);

    parallel_for(count, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::vector<std::uint64_t> stamp(want_domination ? label_count : 0, 0);
        std::uint64_t v = begin;
        for (VertexSet a : SubsetRange(p.m, p.n, begin, end - begin)) {
            const std::uint32_t own = d.id[v];
            std::uint64_t distinct = 0;
            std::uint64_t bad = std::numeric_limits<std::uint64_t>::max();
            for_each_neighbor_rank(a, p, [&](std::uint64_t u) {
                const std::uint32_t other = d.id[u];
                if (other == own) {
                    bad = std::min(bad, u);
                } else if (want_domination && stamp[other] != v + 1) {
                    stamp[other] = v + 1;
                    ++distinct;
                }
            });
            if (bad != std::numeric_limits<std::uint64_t>::max() && !first_violation[w])
                first_violation[w] = std::pair{v, bad};
            if (want_domination) out.dominating[v] = (distinct + 1 == label_count) ? 1 : 0;
            ++v;
        }
    });
    // v ascends within a chunk, so the earliest chunk's first violation has
    // the smallest smaller endpoint; any pair (u, v) with u < v is seen at u.
    for (auto& fv : first_violation) {
        if (fv) {
            out.proper = false;
            out.violation = fv;
            break;
        }
    }
    return out;
}

}  // namespace

ProperResult is_proper(const Coloring& c, unsigned threads) {
    const DenseLabels d = densify(c);
    const Scan s = scan(c, d, false, threads);
    ProperResult out;
    out.proper = s.proper;
    if (s.violation) {
        const auto& p = c.params();
        out.counterexample = std::pair{unrank(SubsetRank{s.violation->first}, p.m, p.n),
                                       unrank(SubsetRank{s.violation->second}, p.m, p.n)};
    }
    return out;
}

std::vector<VertexSet> dominating_vertices(const Coloring& c, ColorLabel label, unsigned threads) {
    const DenseLabels d = densify(c);
    const auto it = std::lower_bound(d.labels.begin(), d.labels.end(), label);
    if (it == d.labels.end() || *it != label)
        throw std::invalid_argument("label " + to_string(label) + " does not occur in the coloring");
    const auto target = static_cast<std::uint32_t>(it - d.labels.begin());
    const Scan s = scan(c, d, true, threads);
    std::vector<VertexSet> out;
    const auto& p = c.params();
    std::uint64_t v = 0;
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        if (d.id[v] == target && s.dominating[v]) out.push_back(a);
        ++v;
    }
    return out;
}

VerificationReport is_b_coloring(const Coloring& c, const VerifyOptions& options) {
    const KneserParams& p = c.params();
    const DenseLabels d = densify(c);
    const Scan s = scan(c, d, true, options.threads);

    VerificationReport r;
    r.m = p.m;
    r.n = p.n;
    r.proper = s.proper;
    if (s.violation)
        r.counterexample = std::pair{unrank(SubsetRank{s.violation->first}, p.m, p.n),
                                     unrank(SubsetRank{s.violation->second}, p.m, p.n)};
    r.color_count = d.labels.size();
    r.bound_lower = 2 * small_binomial(p.m / 2, p.n);
    r.bound_upper = max_degree(p) + 1;

    r.classes.resize(d.labels.size());
    for (std::size_t i = 0; i < d.labels.size(); ++i) r.classes[i].label = d.labels[i];
    std::uint64_t v = 0;
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        ClassReport& cls = r.classes[d.id[v]];
        ++cls.size;
        if (s.dominating[v]) {
            ++cls.dominating_count;
            if (cls.dominating_witnesses.size() < options.max_witnesses) cls.dominating_witnesses.push_back(a);
        }
        ++v;
    }
    r.is_b = r.proper && std::all_of(r.classes.begin(), r.classes.end(),
                                     [](const ClassReport& cls) { return cls.dominating_count > 0; });
    return r;
}

}  // namespace kneser_b
