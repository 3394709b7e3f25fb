#include "kneser_b/io.hpp"

#include <algorithm>

namespace kneser_b {

using nlohmann::ordered_json;

ordered_json to_json(VertexSet s) { return ordered_json(s.elements()); }

ordered_json to_json(ColorLabel label) {
    ordered_json j;
    if (label.is_subset()) {
        j["subset"] = to_json(label.as_subset());
    } else {
        j["synthetic"] = label.value;
    }
    return j;
}

void write_coloring(std::ostream& out, const Coloring& c, const std::string& construction) {
    const KneserParams& p = c.params();
    ordered_json header;
    header["m"] = p.m;
    header["n"] = p.n;
    header["colors"] = c.color_count();
    if (!construction.empty()) header["construction"] = construction;
    out << header.dump() << '\n';
    std::uint64_t v = 0;
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        ordered_json line;
        line["vertex"] = to_json(a);
        line["color"] = to_json(c.label_at(v++));
        out << line.dump() << '\n';
    }
}

namespace {

unsigned as_small_uint(const nlohmann::json& j, std::size_t line, const char* what) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 64)
        throw ParseError(line, std::string(what) + " must be an integer in [0, 64]");
    return j.get<unsigned>();
}

VertexSet parse_set(const nlohmann::json& j, unsigned m, unsigned n, std::size_t line, const char* what) {
    if (!j.is_array()) throw ParseError(line, std::string(what) + " must be an array of elements");
    VertexSet s;
    for (const auto& e : j) {
        const unsigned x = as_small_uint(e, line, what);
        if (x >= m) throw ParseError(line, std::string(what) + " element " + std::to_string(x) + " outside [m]");
        if (s.contains(x)) throw ParseError(line, std::string(what) + " repeats element " + std::to_string(x));
        s.bits |= std::uint64_t{1} << x;
    }
    if (s.size() != n) throw ParseError(line, std::string(what) + " must have exactly n elements");
    return s;
}

}  // namespace

ColoringFile read_coloring(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, text)) {
            ++line_no;
            if (text.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto parse = [&]() {
        try {
            return nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
    };

    if (!next_line()) throw ParseError(0, "empty coloring file");
    const nlohmann::json header = parse();
    if (!header.is_object() || !header.contains("m") || !header.contains("n"))
        throw ParseError(line_no, "header must be an object with \"m\" and \"n\"");
    const unsigned m = as_small_uint(header["m"], line_no, "m");
    const unsigned n = as_small_uint(header["n"], line_no, "n");
    std::optional<KneserParams> params;
    try {
        params.emplace(m, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    std::string construction;
    if (header.contains("construction")) {
        if (!header["construction"].is_string()) throw ParseError(line_no, "\"construction\" must be a string");
        construction = header["construction"].get<std::string>();
    }

    const std::uint64_t count = params->vertex_count();
    std::vector<ColorLabel> labels(count);
    std::vector<std::uint8_t> seen(count, 0);
    std::uint64_t filled = 0;
    while (next_line()) {
        const nlohmann::json rec = parse();
        if (!rec.is_object() || !rec.contains("vertex") || !rec.contains("color"))
            throw ParseError(line_no, "record must have \"vertex\" and \"color\"");
        const VertexSet v = parse_set(rec["vertex"], m, n, line_no, "vertex");
        const nlohmann::json& color = rec["color"];
        ColorLabel label;
        if (color.is_object() && color.size() == 1 && color.contains("subset")) {
            label = ColorLabel::subset(parse_set(color["subset"], m, n, line_no, "subset label"));
        } else if (color.is_object() && color.size() == 1 && color.contains("synthetic")) {
            if (!color["synthetic"].is_number_unsigned())
                throw ParseError(line_no, "synthetic label must be a nonnegative integer");
            label = ColorLabel::synthetic(color["synthetic"].get<std::uint64_t>());
        } else {
            throw ParseError(line_no, "color must be {\"subset\":[...]} or {\"synthetic\":k}");
        }
        const std::uint64_t r = rank_unchecked(v);
        if (seen[r]) throw ParseError(line_no, "vertex " + to_string(v) + " colored twice");
        seen[r] = 1;
        labels[r] = label;
        ++filled;
    }
    if (filled != count)
        throw ParseError(0, "incomplete assignment: " + std::to_string(filled) + " of " + std::to_string(count) +
                                " vertices colored");
    Coloring coloring(*params, std::move(labels));
    if (header.contains("colors")) {
        if (!header["colors"].is_number_unsigned() || header["colors"].get<std::uint64_t>() != coloring.color_count())
            throw ParseError(1, "header \"colors\" does not match the number of distinct labels");
    }
    return ColoringFile{std::move(coloring), std::move(construction)};
}

ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["is_b"] = r.is_b;
    j["proper"] = r.proper;
    if (r.counterexample) {
        j["counterexample"] = ordered_json::array({to_json(r.counterexample->first), to_json(r.counterexample->second)});
    } else {
        j["counterexample"] = nullptr;
    }
    j["color_count"] = r.color_count;
    j["bound_lower"] = r.bound_lower;
    j["bound_upper"] = r.bound_upper;
    ordered_json classes = ordered_json::array();
    for (const ClassReport& cls : r.classes) {
        ordered_json c;
        c["label"] = to_json(cls.label);
        c["size"] = cls.size;
        c["dominating_count"] = cls.dominating_count;
        ordered_json w = ordered_json::array();
        for (VertexSet s : cls.dominating_witnesses) w.push_back(to_json(s));
        c["dominating_witnesses"] = std::move(w);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

ordered_json to_json(const Bounds& b) {
    ordered_json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    return j;
}

ordered_json to_json(const Bounds& b, const ExactResult& r) {
    ordered_json j = to_json(b);
    if (r.exact) {
        j["exact"] = *r.exact;
    } else {
        j["interval"] = ordered_json::array({r.lower, r.upper});
    }
    j["nodes"] = r.nodes;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

void write_dot(std::ostream& out, const KneserParams& p) {
    if (p.vertex_count() > 64)
        throw RefusedError("export-dot is limited to graphs with at most 64 vertices; KG(" + std::to_string(p.m) +
                           "," + std::to_string(p.n) + ") has " + std::to_string(p.vertex_count()));
    auto name = [](VertexSet s) {
        std::string out = "\"";
        bool first = true;
        for (unsigned e : s.elements()) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
        return out + "\"";
    };
    out << "graph KG_" << p.m << "_" << p.n << " {\n";
    for (VertexSet a : iterate_subsets(p.m, p.n)) out << "  " << name(a) << ";\n";
    for (VertexSet a : iterate_subsets(p.m, p.n)) {
        for_each_neighbor(a, p, [&](VertexSet b) {
            if (a < b) out << "  " << name(a) << " -- " << name(b) << ";\n";
        });
    }
    out << "}\n";
}

}  // namespace kneser_b
