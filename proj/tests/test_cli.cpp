#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cbsep/cli.hpp"
#include "cbsep/report.hpp"

using namespace cbsep;

namespace {

namespace fs = std::filesystem;

class TempGraph {
public:
    explicit TempGraph(const std::string& content) {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("cbsep-test-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++) + ".graph");
        std::ofstream out(path_);
        out << content;
    }
    ~TempGraph() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    std::string str() const { return path_.string(); }

private:
    fs::path path_;
};

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
};

RunOutcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const std::string kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const std::string kP3 = "3 2\n0 1\n1 2\n";
const std::string kK3 = "3 3\n0 1\n0 2\n1 2\n";

}  // namespace

TEST_CASE("recognize subcommand") {
    const TempGraph p3(kP3);
    const RunOutcome r = run({"recognize", p3.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("partial-clique: removed {0,2}") != std::string::npos);

    const TempGraph single("3 1\n0 1\n");
    const RunOutcome no = run({"recognize", single.str()});
    CHECK(no.code == 0);
    CHECK(no.out.find("not a partial-clique") != std::string::npos);
    CHECK(no.out.find("violating triple: (0,1,2)") != std::string::npos);

    const TempGraph k4(kK4);
    const RunOutcome complete = run({"recognize", k4.str()});
    CHECK(complete.code == 0);
    CHECK(complete.out.find("removed (none)") != std::string::npos);
}

TEST_CASE("recognize json output parses back") {
    const TempGraph p3(kP3);
    const RunOutcome r = run({"recognize", p3.str(), "--format", "json", "--seed", "5"});
    REQUIRE(r.code == 0);
    const RecognizeReport rep = parse_recognize_report(r.out);
    CHECK(rep.is_partial_clique);
    CHECK((rep.removed_sets == std::vector<VertexSet>{{0, 2}}));
    CHECK(rep.config.command == "recognize");
    CHECK(rep.config.seed == 5);
    CHECK(rep.config.format == "json");
}

TEST_CASE("complete subcommand") {
    const TempGraph k3(kK3);
    const RunOutcome found = run({"complete", k3.str(), "0-1", "0-2"});
    CHECK(found.code == 0);
    CHECK(found.out.find("completion: removed {1,2}") != std::string::npos);

    const RunOutcome comma = run({"complete", k3.str(), "0,1", "0,2"});
    CHECK(comma.out == found.out);

    const RunOutcome blocked = run({"complete", k3.str(), "0-1"});
    CHECK(blocked.code == 0);
    CHECK(blocked.out.find("completion: none") != std::string::npos);
    CHECK(blocked.out.find("kept edge 0-1") != std::string::npos);

    const TempGraph split("4 2\n0 1\n2 3\n");
    const RunOutcome disc = run({"complete", split.str(), "0-1"});
    CHECK(disc.code == 2);
    CHECK(disc.err.find("error:") != std::string::npos);

    CHECK(run({"complete", k3.str(), "0*1"}).code == 2);
    CHECK(run({"complete", k3.str(), "0-0"}).code == 2);
    CHECK(run({"complete", k3.str(), "0-7"}).code == 2);
}

TEST_CASE("solve subcommand text output") {
    const TempGraph k4(kK4);
    const RunOutcome r = run({"solve", k4.str()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("exact: 4") != std::string::npos);
    CHECK(r.out.find("window: sizes 2..2") != std::string::npos);
    CHECK(r.out.find("kind=type1") != std::string::npos);
    CHECK(r.out.find("rounded: cut=4") != std::string::npos);
    CHECK(r.out.find("rounded/exact=1") != std::string::npos);
}

TEST_CASE("solve json output is deterministic and parses back") {
    const TempGraph k4(kK4);
    const std::vector<std::string> args{
        "solve", k4.str(), "--format", "json", "--seed", "7"};
    const RunOutcome a = run(args);
    const RunOutcome b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const SolveDocument doc = parse_solve_document(a.out);
    CHECK(doc.config.seed == 7);
    CHECK(doc.report.exact_value == 4);
    CHECK(doc.report.rounded.cut_size == 4);
    CHECK(to_json_string(doc) == a.out);
}

TEST_CASE("solve honors parameters") {
    const TempGraph k4(kK4);
    CHECK(run({"solve", k4.str(), "--c", "0.6"}).code == 2);
    CHECK(run({"solve", k4.str(), "--p", "2.5"}).code == 2);
    CHECK(run({"solve", k4.str(), "--balance-scale", "1.5"}).code == 2);
    CHECK(run({"solve", k4.str(), "--balance-scale", "2"}).code == 0);
    CHECK(run({"solve", k4.str(), "--trials", "0"}).code == 2);

    const TempGraph ten("10 0\n");
    const RunOutcome limited = run({"solve", ten.str()});
    CHECK(limited.code == 2);
    CHECK(limited.err.find("limit") != std::string::npos);
    CHECK(run({"solve", ten.str(), "--limit", "10"}).code == 0);

    const TempGraph thirteen("13 0\n");
    CHECK(run({"solve", thirteen.str(), "--limit", "13"}).code == 2);
}

TEST_CASE("input failures exit with code 2") {
    CHECK(run({"recognize", "/nonexistent/file.graph"}).code == 2);
    const TempGraph garbage("what is this\n");
    const RunOutcome r = run({"recognize", garbage.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("argument parsing") {
    CHECK(run({}).code == 2);                          // a subcommand is required
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"selftest", "sometimes"}).code == 2);   // unknown level
    CHECK(run({"selftest"}).code == 2);                // level is required
    const TempGraph k4(kK4);
    CHECK(run({"solve", k4.str(), "--format", "yaml"}).code == 2);
    CHECK(run({"solve", k4.str(), "--tol-psd", "-1"}).code == 2);
}

TEST_CASE("quick selftest passes through the real command path") {
    const RunOutcome r = run({"selftest", "quick"});
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    int passes = 0;
    for (std::size_t pos = 0; (pos = r.out.find("[PASS]", pos)) != std::string::npos;
         ++pos)
        ++passes;
    CHECK(passes == 10);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}
