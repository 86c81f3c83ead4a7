#include "lspace/calculus.hpp"
#include "lspace/cli.hpp"
#include "lspace/errors.hpp"
#include "lspace/graph_io.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lspace;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("lspace_test_" + std::to_string(std::rand()) + ".txt");
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_graph accepts the documented format") {
    DecoratedGraph g = parse_graph("# a comment\n"
                                   "vertex 1 -1 arrows=1\n");
    REQUIRE(g.graph.size() == 1);
    CHECK(g.graph.weight(1) == -1);
    CHECK(g.arrows_at(1) == 1);
}

TEST_CASE("parse_graph reads a decorated resolution file") {
    DecoratedGraph g = parse_graph("vertex 0 -2\n"
                                   "vertex 1 -1 arrows=3\n"
                                   "vertex 2 -3\n"
                                   "edge 0 1\n"
                                   "edge 1 2\n");
    CHECK(g.graph.size() == 3);
    CHECK(g.arrow_count() == 3);
    CHECK(testutil::isomorphic(g.graph, make_chain({-2, -1, -3})));
}

TEST_CASE("parse_graph reports the offending line") {
    auto check_line = [](const std::string& text, int line) {
        try {
            parse_graph(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == line);
        }
    };
    check_line("edge 1 2\n", 1);
    check_line("vertex 1 -2\nvertex 1 -3\n", 2);
    check_line("vertex 1 -2\nedge 1 1\n", 2);
    check_line("vertex 1 -2\nvertex 2 -2\nedge 1 2\nedge 2 1\n", 4);
    check_line("vertex 1 -2\nvertex 2 -2\nvertex 3 -2\n"
               "edge 1 2\nedge 2 3\nedge 3 1\n",
               6);
    check_line("vertex 1 -2\nfrobnicate\n", 2);
    check_line("vertex 1 abc\n", 1);
}

TEST_CASE("render/parse round trip on generator output") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        DecoratedGraph g = random_smooth_decorated(seed, int(seed % 11), int(seed % 4));
        DecoratedGraph back = parse_graph(render_graph(g));
        CAPTURE(seed);
        CHECK(testutil::isomorphic(g.graph, back.graph));
        CHECK(g.arrows == back.arrows);
    }
}

TEST_CASE("classify-torus subcommand") {
    RunResult r = run_cli({"classify-torus", "-p", "2", "-q", "3", "-d", "8,9"});
    CHECK(r.code == 0);
    CHECK(r.out == "LSPACE\n");
    CHECK(run_cli({"classify-torus", "-p", "2", "-q", "3", "-d", "7,9"}).out == "BOUNDARY\n");
    CHECK(run_cli({"classify-torus", "-p", "2", "-q", "3", "-d=-1"}).out == "NOT_LSPACE\n");
}

TEST_CASE("oracle subcommand") {
    TempFile f("vertex 0 -2\nvertex 1 -1\nvertex 2 -3\nvertex 3 -7\n"
               "edge 0 1\nedge 1 2\nedge 1 3\n");
    RunResult r = run_cli({"oracle", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "NOT_LSPACE h1=1\n");
}

TEST_CASE("rational subcommand") {
    TempFile f("vertex 0 -2\nvertex 1 -2\nedge 0 1\n");
    RunResult r = run_cli({"rational", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "rational=true bounds=MINIMAL_RATIONAL\n");
}

TEST_CASE("reduce pipes back through parse_graph") {
    TempFile f("vertex 0 -2\nvertex 1 -1\nvertex 2 -2\nedge 0 1\nedge 1 2\n");
    RunResult r = run_cli({"reduce", f.path.string()});
    CHECK(r.code == 0);
    DecoratedGraph g = parse_graph(r.out);
    REQUIRE(g.graph.size() == 1);
    CHECK(g.graph.vertices[0].weight == 0);
}

TEST_CASE("resolve and surgery subcommands") {
    RunResult r = run_cli({"resolve", "-p", "2", "-q", "3", "-r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# multiplicity") != std::string::npos);
    DecoratedGraph g = parse_graph(r.out);
    CHECK(g.arrow_count() == 2);
    CHECK(testutil::isomorphic(g.graph, make_chain({-2, -1, -3})));

    RunResult s = run_cli({"surgery", "-p", "2", "-q", "3", "-d", "7"});
    CHECK(s.code == 0);
    DecoratedGraph sg = parse_graph(s.out);
    CHECK(testutil::isomorphic(sg.graph, make_star(-1, {{-2}, {-3}, {1}})));
}

TEST_CASE("cross-validate subcommand") {
    RunResult r = run_cli({"cross-validate", "-p", "2", "-q", "3", "-d", "8,9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify=LSPACE\n") != std::string::npos);
    CHECK(r.out.find("oracle=LSPACE\n") != std::string::npos);
    CHECK(r.out.find("agree=true\n") != std::string::npos);
    CHECK(r.out.find("linking_det=36\n") != std::string::npos);
    CHECK(r.out.find("h1=36\n") != std::string::npos);
}

TEST_CASE("atlas subcommand writes files") {
    auto csv_path = std::filesystem::temp_directory_path() / "lspace_test_atlas.csv";
    RunResult r = run_cli({"atlas", "-p", "2", "-q", "3", "--range=-6..12", "--format", "csv",
                           "--out", csv_path.string()});
    CHECK(r.code == 0);
    std::ifstream in(csv_path);
    std::string line;
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 362); // header + 19*19 cells
    std::filesystem::remove(csv_path);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"classify-torus", "-p", "2", "-q", "3"}).code == 2);   // missing -d
    CHECK(run_cli({"classify-torus", "-p", "2", "-q", "4", "-d", "5"}).code == 3);
    CHECK(run_cli({"oracle", "/nonexistent/file.txt"}).code == 2);
    CHECK(run_cli({"bogus-subcommand"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    TempFile cyc("vertex 1 -2\nvertex 2 -2\nvertex 3 -2\nedge 1 2\nedge 2 3\nedge 3 1\n");
    CHECK(run_cli({"oracle", cyc.path.string()}).code == 2);
    // unsupported graph class: positive vertex of valency 2
    TempFile pos("vertex 1 -2\nvertex 2 5\nvertex 3 -2\nedge 1 2\nedge 2 3\n");
    CHECK(run_cli({"oracle", pos.path.string()}).code == 3);
}

TEST_CASE("identical invocations are byte identical") {
    RunResult a = run_cli({"cross-validate", "-p", "3", "-q", "4", "-d", "10,14"});
    RunResult b = run_cli({"cross-validate", "-p", "3", "-q", "4", "-d", "10,14"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

} // TEST_SUITE
