#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kneser_b/coloring.hpp"
#include "kneser_b/solver.hpp"
#include "kneser_b/verify.hpp"

namespace kneser_b {

// Malformed coloring input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// JSON-lines coloring format. Line 1:
//   {"m":M,"n":N,"colors":K,"construction":"case1"}
// then one line per vertex in colex order:
//   {"vertex":[0,1,2],"color":{"subset":[0,1,2]}}  or  {"color":{"synthetic":3}}
// "construction" is omitted when empty.
void write_coloring(std::ostream& out, const Coloring& c, const std::string& construction = {});

struct ColoringFile {
    Coloring coloring;
    std::string construction;
};

// Accepts vertex lines in any order. Throws ParseError for malformed lines,
// duplicate or out-of-range vertices, a header "colors" that disagrees with
// the body, and for incomplete assignments.
ColoringFile read_coloring(std::istream& in);

nlohmann::ordered_json to_json(ColorLabel label);
nlohmann::ordered_json to_json(VertexSet s);
nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const Bounds& b);
nlohmann::ordered_json to_json(const Bounds& b, const ExactResult& r);

// Undirected DOT graph; nodes are named by their sorted element lists.
// Throws RefusedError when C(m,n) > 64.
void write_dot(std::ostream& out, const KneserParams& p);

}  // namespace kneser_b
