#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kneser_b/cli.hpp"

namespace fs = std::filesystem;
using kneser_b::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "kneser_b_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("color header and size") {
    const Result r = call({"color", "10", "3"});
    CHECK(r.code == 0);
    const auto header = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(header["colors"] == 20);
    CHECK(header["construction"] == "case1");

    const Result small = call({"color", "6", "3"});
    CHECK(std::count(small.out.begin(), small.out.end(), '\n') == 21);
    CHECK(nlohmann::json::parse(small.out.substr(0, small.out.find('\n')))["colors"] == 2);
}

TEST_CASE("color then verify") {
    const fs::path file = scratch("c10_3.jsonl");
    CHECK(call({"color", "10", "3", "-o", file.string()}).code == 0);
    const Result v = call({"verify", file.string()});
    CHECK(v.code == 0);
    const auto report = nlohmann::json::parse(v.out);
    CHECK(report["is_b"] == true);
    CHECK(report["color_count"] == 20);
}

TEST_CASE("verify flags a shared label on an edge") {
    const fs::path file = scratch("bad.jsonl");
    {
        std::ofstream out(file);
        out << R"({"m":4,"n":2})" << '\n';
        // {0,1} and {2,3} are disjoint and share label 0
        out << R"({"vertex":[0,1],"color":{"synthetic":0}})" << '\n';
        out << R"({"vertex":[0,2],"color":{"synthetic":0}})" << '\n';
        out << R"({"vertex":[1,2],"color":{"synthetic":1}})" << '\n';
        out << R"({"vertex":[0,3],"color":{"synthetic":1}})" << '\n';
        out << R"({"vertex":[1,3],"color":{"synthetic":1}})" << '\n';
        out << R"({"vertex":[2,3],"color":{"synthetic":0}})" << '\n';
    }
    const Result v = call({"verify", file.string()});
    CHECK(v.code == 1);
    const auto report = nlohmann::json::parse(v.out);
    CHECK(report["proper"] == false);
    CHECK(report["counterexample"] == nlohmann::json::parse("[[0,1],[2,3]]"));
    CHECK(v.err.find("not proper") != std::string::npos);
}

TEST_CASE("verify on a truncated file is an input error") {
    const fs::path file = scratch("trunc.jsonl");
    CHECK(call({"color", "8", "3", "-o", file.string()}).code == 0);
    const std::string text = slurp(file);
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << text.substr(0, text.size() / 2);
    }
    const Result v = call({"verify", file.string()});
    CHECK(v.code == 2);
    CHECK(v.err.find("line") != std::string::npos);

    CHECK(call({"verify", scratch("missing.jsonl").string()}).code == 2);
}

TEST_CASE("bounds, brute and export-dot") {
    const Result b = call({"bounds", "10", "3"});
    CHECK(b.code == 0);
    CHECK(nlohmann::json::parse(b.out) == nlohmann::json::parse(R"({"lower":20,"upper":36})"));

    const Result brute = call({"brute", "5", "2"});
    CHECK(brute.code == 0);
    CHECK(nlohmann::json::parse(brute.out)["exact"] == 3);

    const Result refused = call({"brute", "10", "2"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("refused") != std::string::npos);

    const Result dot = call({"export-dot", "5", "2"});
    CHECK(dot.code == 0);
    CHECK(std::count(dot.out.begin(), dot.out.end(), '\n') == 1 + 10 + 15 + 1);
    CHECK(call({"export-dot", "12", "4"}).code == 2);
}

TEST_CASE("argument errors") {
    CHECK(call({"color", "5", "3"}).code == 2);
    CHECK(call({"color", "8", "2"}).code == 2);
    CHECK(call({"color"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("thread count does not change output") {
    const Result one = call({"--threads", "1", "color", "14", "4"});
    const Result four = call({"--threads", "4", "color", "14", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

#ifdef KNESER_B_CLI_PATH
TEST_CASE("installed binary honors the exit-code contract") {
    const fs::path file = scratch("bin.jsonl");
    const std::string bin = KNESER_B_CLI_PATH;
    CHECK(std::system((bin + " color 9 3 -o " + file.string()).c_str()) == 0);
    CHECK(std::system((bin + " verify " + file.string() + " > /dev/null").c_str()) == 0);
    CHECK(WEXITSTATUS(std::system((bin + " color 4 3 2> /dev/null").c_str())) == 2);
}
#endif
