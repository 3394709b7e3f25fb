#include "kneser_b/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "kneser_b/construction.hpp"
#include "kneser_b/verify.hpp"

namespace kneser_b {

std::optional<std::uint64_t> theorem_a_formula(unsigned m) {
    if (m < 4) throw std::invalid_argument("theorem_a_formula requires m >= 4 (KG(m,2) needs m >= 2n)");
    if (m == 8) return std::nullopt;
    const std::uint64_t mm = m;
    if (m % 2 == 1) return mm * (mm - 1) / 6;
    return (mm - 1) * (mm - 2) / 6 + 3;
}

Coloring extract_b_coloring(const Coloring& proper_coloring, unsigned threads) {
    const KneserParams& p = proper_coloring.params();
    if (const ProperResult pr = is_proper(proper_coloring, threads); !pr.proper)
        throw std::invalid_argument("extract_b_coloring: input is not proper; " + to_string(pr.counterexample->first) +
                                    " and " + to_string(pr.counterexample->second) + " share a label");
    std::vector<ColorLabel> labels = proper_coloring.assignment();
    VerifyOptions opts;
    opts.max_witnesses = 0;
    opts.threads = threads;
    while (true) {
        const Coloring current(p, labels);
        const VerificationReport report = is_b_coloring(current, opts);
        const ClassReport* victim = nullptr;
        for (const ClassReport& cls : report.classes) {
            if (cls.dominating_count > 0) continue;
            // classes are sorted by label, so strict < keeps the smallest label on ties
            if (victim == nullptr || cls.size < victim->size) victim = &cls;
        }
        if (victim == nullptr) return current;

        const ColorLabel dissolved = victim->label;
        std::vector<ColorLabel> others;
        for (const ClassReport& cls : report.classes)
            if (cls.label != dissolved) others.push_back(cls.label);

        std::uint64_t v = 0;
        for (VertexSet a : iterate_subsets(p.m, p.n)) {
            if (labels[v] == dissolved) {
                std::vector<std::uint8_t> seen(others.size(), 0);
                for_each_neighbor_rank(a, p, [&](std::uint64_t u) {
                    const auto it = std::lower_bound(others.begin(), others.end(), labels[u]);
                    if (it != others.end() && *it == labels[u]) seen[it - others.begin()] = 1;
                });
                const auto free_slot = std::find(seen.begin(), seen.end(), 0);
                if (free_slot == seen.end())
                    throw std::logic_error("extract_b_coloring: vertex " + to_string(a) +
                                           " of a witness-less class is dominating");
                labels[v] = others[free_slot - seen.begin()];
            }
            ++v;
        }
    }
}

namespace {

class BSearch {
public:
    enum class Outcome { found, refuted, budget };

    BSearch(const KneserParams& p, const SearchBudget& budget, std::uint64_t& nodes,
            std::chrono::steady_clock::time_point deadline)
        : budget_(budget), nodes_(nodes), deadline_(deadline) {
        for (VertexSet a : iterate_subsets(p.m, p.n)) sets_.push_back(a);
        vertices_ = static_cast<unsigned>(sets_.size());
        for (unsigned v = 0; v < vertices_; ++v)
            for (unsigned u = 0; u < vertices_; ++u)
                if (adjacent(sets_[v], sets_[u])) adj_[v] |= std::uint64_t{1} << u;
    }

    Outcome run(unsigned t) {
        t_ = t;
        all_colors_ = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
        color_.fill(-1);
        for (auto& row : count_) row.fill(0);
        nb_mask_.fill(0);
        unassigned_ = vertices_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices_) - 1;
        used_ = 0;
        stop_ = false;
        const bool ok = dfs();
        if (ok) return Outcome::found;
        return stop_ ? Outcome::budget : Outcome::refuted;
    }

    std::vector<ColorLabel> solution() const {
        std::vector<ColorLabel> out(vertices_);
        for (unsigned v = 0; v < vertices_; ++v) out[v] = ColorLabel::synthetic(static_cast<std::uint64_t>(color_[v]));
        return out;
    }

private:
    void assign(unsigned v, int c) {
        color_[v] = static_cast<std::int8_t>(c);
        unassigned_ &= ~(std::uint64_t{1} << v);
        for (std::uint64_t nb = adj_[v]; nb != 0; nb &= nb - 1) {
            const unsigned u = static_cast<unsigned>(std::countr_zero(nb));
            if (count_[u][c]++ == 0) nb_mask_[u] |= std::uint64_t{1} << c;
        }
    }

    void unassign(unsigned v) {
        const int c = color_[v];
        color_[v] = -1;
        unassigned_ |= std::uint64_t{1} << v;
        for (std::uint64_t nb = adj_[v]; nb != 0; nb &= nb - 1) {
            const unsigned u = static_cast<unsigned>(std::countr_zero(nb));
            if (--count_[u][c] == 0) nb_mask_[u] &= ~(std::uint64_t{1} << c);
        }
    }

    // Can vertex v still become dominating for color c?
    bool can_dominate(unsigned v, unsigned c) const {
        const std::uint64_t cbit = std::uint64_t{1} << c;
        if (color_[v] >= 0) {
            if (static_cast<unsigned>(color_[v]) != c) return false;
        } else if (nb_mask_[v] & cbit) {
            return false;
        }
        const std::uint64_t need = all_colors_ & ~cbit & ~nb_mask_[v];
        if (need == 0) return true;
        const std::uint64_t open = adj_[v] & unassigned_;
        if (std::popcount(need) > std::popcount(open)) return false;
        std::uint64_t cover = 0;
        for (std::uint64_t nb = open; nb != 0; nb &= nb - 1)
            cover |= ~nb_mask_[std::countr_zero(nb)];
        return (need & ~cover) == 0;
    }

    bool feasible() const {
        if (used_ + static_cast<unsigned>(std::popcount(unassigned_)) < t_) return false;
        for (unsigned c = 0; c < used_; ++c) {
            bool any = false;
            for (unsigned v = 0; v < vertices_ && !any; ++v) any = can_dominate(v, c);
            if (!any) return false;
        }
        return true;
    }

    bool complete() const {
        if (used_ != t_) return false;
        std::uint64_t dominated = 0;
        for (unsigned v = 0; v < vertices_; ++v) {
            const std::uint64_t own = std::uint64_t{1} << color_[v];
            if ((nb_mask_[v] | own) == all_colors_) dominated |= own;
        }
        return dominated == all_colors_;
    }

    bool out_of_budget() {
        ++nodes_;
        if (nodes_ >= budget_.max_nodes) return true;
        if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() >= deadline_) return true;
        return false;
    }

    bool dfs() {
        if (stop_) return false;
        if (out_of_budget()) {
            stop_ = true;
            return false;
        }
        if (unassigned_ == 0) return complete();
        if (!feasible()) return false;

        // most saturated unassigned vertex, lowest index on ties
        unsigned pick = 0;
        int best = -1;
        for (std::uint64_t rest = unassigned_; rest != 0; rest &= rest - 1) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            const int sat = std::popcount(nb_mask_[v]);
            if (sat > best) {
                best = sat;
                pick = v;
            }
        }
        // Unused colors are interchangeable: only the next fresh one is tried.
        if (used_ < t_) {
            ++used_;
            assign(pick, static_cast<int>(used_ - 1));
            const bool ok = dfs();
            if (ok) return true;
            unassign(pick);
            --used_;
            if (stop_) return false;
        }
        for (unsigned c = 0; c < used_; ++c) {
            if (nb_mask_[pick] & (std::uint64_t{1} << c)) continue;
            assign(pick, static_cast<int>(c));
            if (dfs()) return true;
            unassign(pick);
            if (stop_) return false;
        }
        return false;
    }

    const SearchBudget& budget_;
    std::uint64_t& nodes_;
    std::chrono::steady_clock::time_point deadline_;

    std::vector<VertexSet> sets_;
    unsigned vertices_ = 0;
    std::array<std::uint64_t, 64> adj_{};

    unsigned t_ = 0;
    std::uint64_t all_colors_ = 0;
    std::array<std::int8_t, 64> color_{};
    std::array<std::array<std::uint8_t, 64>, 64> count_{};
    std::array<std::uint64_t, 64> nb_mask_{};
    std::uint64_t unassigned_ = 0;
    unsigned used_ = 0;
    bool stop_ = false;
};

}  // namespace

ExactResult exact_b_chromatic(const KneserParams& p, const SearchBudget& budget) {
    const std::uint64_t cap = std::min<std::uint64_t>(budget.vertex_cap, 64);
    if (p.vertex_count() > cap)
        throw RefusedError("KG(" + std::to_string(p.m) + "," + std::to_string(p.n) + ") has " +
                           std::to_string(p.vertex_count()) + " vertices; exact search is capped at " +
                           std::to_string(cap));

    const auto deadline = std::chrono::steady_clock::now() + budget.max_time;
    ExactResult out;

    // Certified start: any proper coloring reduces to a b-coloring.
    Coloring fallback = extract_b_coloring(standard_proper_coloring(p), 1);
    const std::uint64_t certified = fallback.color_count();

    const std::uint64_t top = std::min<std::uint64_t>(max_degree(p) + 1, p.vertex_count());
    BSearch search(p, budget, out.nodes, deadline);
    for (std::uint64_t t = top; t > certified; --t) {
        switch (search.run(static_cast<unsigned>(t))) {
            case BSearch::Outcome::found:
                out.exact = t;
                out.lower = out.upper = t;
                out.witness = Coloring(p, search.solution());
                return out;
            case BSearch::Outcome::refuted:
                break;
            case BSearch::Outcome::budget:
                out.budget_exhausted = true;
                out.lower = certified;
                out.upper = t;
                out.witness = std::move(fallback);
                return out;
        }
    }
    out.exact = certified;
    out.lower = out.upper = certified;
    out.witness = std::move(fallback);
    return out;
}

Bounds bounds(const KneserParams& p) {
    Bounds b;
    b.upper = max_degree(p) + 1;
    if (p.n >= 3) {
        b.lower = theorem_lower_bound(p);
    } else if (p.n == 2 && p.m >= 5) {
        // the closed form overshoots the degree bound at m = 4
        b.lower = theorem_a_formula(p.m).value_or(chromatic_number(p));
    } else {
        b.lower = chromatic_number(p);
    }
    return b;
}

}  // namespace kneser_b
