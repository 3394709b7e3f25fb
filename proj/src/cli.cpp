#include "kneser_b/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "kneser_b/construction.hpp"
#include "kneser_b/io.hpp"
#include "kneser_b/solver.hpp"
#include "kneser_b/verify.hpp"

namespace kneser_b::cli {

namespace {

// Opens `path` for writing, or forwards to `fallback` for "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::invalid_argument("cannot open " + path + " for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_color(unsigned m, unsigned n, const std::string& output, unsigned threads, std::ostream& out) {
    const KneserParams p(m, n);
    const ConstructionKind kind = construction_kind(p);
    const Coloring c = build(p, threads);
    Sink sink(output, out);
    write_coloring(sink.get(), c, std::string(to_string(kind)));
    sink.get().flush();
    if (!sink.get()) throw std::runtime_error("write failed");
    return kOk;
}

int cmd_verify(const std::string& input, std::size_t witnesses, unsigned threads, std::ostream& out,
               std::ostream& err) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
        file.open(input, std::ios::binary);
        if (!file) throw ParseError(0, "cannot open " + input);
        in = &file;
    }
    const ColoringFile parsed = read_coloring(*in);
    VerifyOptions opts;
    opts.max_witnesses = witnesses;
    opts.threads = threads;
    const VerificationReport report = is_b_coloring(parsed.coloring, opts);
    out << to_json(report).dump() << '\n';
    if (report.counterexample)
        err << "not proper: " << to_string(report.counterexample->first) << " and "
            << to_string(report.counterexample->second) << " are disjoint and share a label\n";
    return report.is_b ? kOk : kSemanticFailure;
}

int cmd_bounds(unsigned m, unsigned n, std::ostream& out) {
    const Bounds b = bounds(KneserParams(m, n));
    out << to_json(b).dump() << '\n';
    return b.lower <= b.upper ? kOk : kSemanticFailure;
}

int cmd_brute(unsigned m, unsigned n, const SearchBudget& budget, std::ostream& out) {
    const KneserParams p(m, n);
    const Bounds b = bounds(p);
    const ExactResult r = exact_b_chromatic(p, budget);
    out << to_json(b, r).dump() << '\n';
    // the closed-form lower value is only trusted where it fits under D+1
    const bool consistent = r.upper <= b.upper && (!r.exact || *r.exact >= b.lower);
    return consistent ? kOk : kSemanticFailure;
}

int cmd_export_dot(unsigned m, unsigned n, const std::string& output, std::ostream& out) {
    const KneserParams p(m, n);
    std::ostringstream buffer;
    write_dot(buffer, p);
    Sink sink(output, out);
    sink.get() << buffer.str();
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and analyze b-colorings of Kneser graphs KG(m,n)", "kneser-b"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")->envname("KNESER_B_THREADS");

    unsigned m = 0;
    unsigned n = 0;
    auto add_mn = [&](CLI::App* sub) {
        sub->add_option("m", m, "Ground set size")->required();
        sub->add_option("n", n, "Subset size")->required();
    };

    std::string output = "-";
    auto* color = app.add_subcommand("color", "Build the b-coloring and write it as JSON lines");
    add_mn(color);
    color->add_option("-o,--output", output, "Output path ('-' for stdout)");

    std::string input;
    std::size_t witnesses = 16;
    auto* verify = app.add_subcommand("verify", "Check a coloring file and print the report as JSON");
    verify->add_option("input", input, "Coloring file ('-' for stdin)")->required();
    verify->add_option("--witnesses", witnesses, "Dominating witnesses listed per class");

    auto* bounds_cmd = app.add_subcommand("bounds", "Print lower and upper bounds on the b-chromatic number");
    add_mn(bounds_cmd);

    SearchBudget budget;
    double seconds = 300.0;
    auto* brute = app.add_subcommand("brute", "Exact b-chromatic number by exhaustive search");
    add_mn(brute);
    brute->add_option("--budget,--seconds", seconds, "Wall-clock budget in seconds");
    brute->add_option("--max-nodes", budget.max_nodes, "Search node budget");
    brute->add_option("--vertex-cap", budget.vertex_cap, "Refuse graphs with more vertices (at most 64)");

    auto* dot = app.add_subcommand("export-dot", "Write KG(m,n) as a DOT graph (at most 64 vertices)");
    add_mn(dot);
    dot->add_option("-o,--output", output, "Output path ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (color->parsed()) return cmd_color(m, n, output, threads, out);
        if (verify->parsed()) return cmd_verify(input, witnesses, threads, out, err);
        if (bounds_cmd->parsed()) return cmd_bounds(m, n, out);
        if (brute->parsed()) {
            budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
            return cmd_brute(m, n, budget, out);
        }
        if (dot->parsed()) return cmd_export_dot(m, n, output, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const RefusedError& e) {
        err << "refused: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSemanticFailure;
    }
    return kInputError;
}

}  // namespace kneser_b::cli
