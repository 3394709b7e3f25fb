#include "kneser_b/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneser_b {

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (unsigned e : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string to_string(ColorLabel label) {
    if (label.is_subset()) return to_string(label.as_subset());
    return "#" + std::to_string(label.value);
}

Coloring::Coloring(KneserParams params, std::vector<ColorLabel> assignment)
    : params_(params), assignment_(std::move(assignment)) {
    if (assignment_.size() != params_.vertex_count())
        throw std::invalid_argument("incomplete assignment: " + std::to_string(assignment_.size()) + " of " +
                                    std::to_string(params_.vertex_count()) + " vertices colored");
}

ColorLabel Coloring::label_of(VertexSet v) const {
    if (!params_.is_vertex(v)) throw std::invalid_argument(to_string(v) + " is not a vertex");
    return assignment_[rank_unchecked(v)];
}

std::vector<ColorLabel> Coloring::labels() const {
    std::vector<ColorLabel> out(assignment_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace kneser_b
