#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "betpo/core.hpp"
#include "betpo/generators.hpp"
#include "betpo/io.hpp"
#include "betpo/recognize.hpp"
#include "betpo/transform.hpp"

// End-to-end exercises of the installed binary, driven through /bin/sh.
// BETPO_CLI_PATH is injected by the build.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

class TempDir {
  public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "betpo_cli_XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path file(const std::string& name) const { return path_ / name; }

  private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

// args is the tail of the command line; stdin_text is piped in. env_prefix
// may carry VAR=value assignments.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
    static int counter = 0;
    static TempDir dir;
    fs::path in = dir.file("in" + std::to_string(counter));
    fs::path out = dir.file("out" + std::to_string(counter));
    fs::path err = dir.file("err" + std::to_string(counter));
    ++counter;
    spit(in, stdin_text);
    std::string cmd = env_prefix + " " + std::string(BETPO_CLI_PATH) + " " + args + " < " +
                      in.string() + " > " + out.string() + " 2> " + err.string();
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

betpo::Poset parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    return betpo::parse_poset(in);
}

betpo::TernaryStructure parse_structure_text(const std::string& text) {
    std::istringstream in(text);
    return betpo::parse_structure(in);
}

// Accepts exactly the undirected DOT subset the tool emits.
bool valid_dot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) return false;
    if (!std::regex_match(line, std::regex(R"(graph [A-Za-z_][A-Za-z_0-9]* \{)"))) return false;
    const std::regex node(R"(  (\d+);)");
    const std::regex edge(R"(  (\d+) -- (\d+);)");
    bool closed = false;
    std::vector<std::string> nodes;
    while (std::getline(in, line)) {
        if (closed) return false;
        std::smatch m;
        if (line == "}") {
            closed = true;
        } else if (std::regex_match(line, m, node)) {
            nodes.push_back(m[1]);
        } else if (std::regex_match(line, m, edge)) {
            // both endpoints must have been declared
            bool a = std::find(nodes.begin(), nodes.end(), m[1]) != nodes.end();
            bool b = std::find(nodes.begin(), nodes.end(), m[2]) != nodes.end();
            if (!a || !b) return false;
        } else {
            return false;
        }
    }
    return closed;
}

}  // namespace

using namespace betpo;

TEST_CASE("odd glued cycle is rejected through the pipe") {
    RunResult gen = run_cli("gen bcycle 3");
    REQUIRE_EQ(gen.exit_code, 0);
    RunResult check = run_cli("check -", gen.out);
    CHECK_EQ(check.exit_code, 2);
    CHECK_EQ(check.out, "rejected ExtNotBipartite\n");
    CHECK(contains(check.err, "reason: ExtNotBipartite"));
    CHECK(contains(check.err, "component: 0 1 2 3 4 5"));
}

TEST_CASE("accepted witness reproduces the piped structure") {
    TempDir dir;
    RunResult bet = run_cli("bet -", run_cli("gen fence 2").out);
    REQUIRE_EQ(bet.exit_code, 0);
    CHECK_EQ(bet.out, "ternary 4\n0 1 2\n0 3 2\n2 1 0\n2 3 0\n");

    fs::path witness = dir.file("out.poset");
    RunResult check = run_cli("check - --emit-poset " + witness.string(), bet.out);
    CHECK_EQ(check.exit_code, 0);
    CHECK_EQ(check.out, "accepted\n");
    CHECK(betweenness_of(parse_poset_text(slurp(witness))) == b_cycle(2));
}

TEST_CASE("minimization reports the dropped pairs on stderr") {
    RunResult r = run_cli("minimize -", run_cli("gen example3").out);
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(r.err, "removed 4 5\n");
    CHECK_FALSE(contains(r.out, "removed"));
    CHECK(parse_poset_text(r.out) == minimize(example3()));
}

TEST_CASE("all solutions are written as numbered poset files") {
    TempDir dir;
    RunResult bet = run_cli("bet -", run_cli("gen example5").out);
    fs::path base = dir.file("sol");
    RunResult check =
        run_cli("check - --emit-poset " + base.string() + " --all-solutions", bet.out);
    CHECK_EQ(check.exit_code, 0);
    CHECK_EQ(check.out, "accepted\nsolutions 4\n");
    CHECK_FALSE(fs::exists(base));  // only the numbered files appear

    auto expected = solutions_b_minimal(betweenness_of(example5()));
    REQUIRE_EQ(expected.size(), 4);
    for (std::size_t i = 0; i < 4; ++i) {
        fs::path f = dir.file("sol." + std::to_string(i));
        REQUIRE(fs::exists(f));
        CHECK(parse_poset_text(slurp(f)) == expected[i]);
    }
}

TEST_CASE("cut prints the two sides") {
    RunResult r = run_cli("cut -", run_cli("gen chain 3").out);
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(r.out, "L: 0\nU: 1 2\n");

    RunResult iso = run_cli("cut -", "poset 2\n");
    CHECK_EQ(iso.exit_code, 2);
    CHECK(iso.out.empty());
    CHECK(contains(iso.err, "comparable to nothing"));
}

TEST_CASE("sentence evaluation from the command line") {
    RunResult sat = run_cli("mso -", run_cli("bet -", run_cli("gen chain 3").out).out);
    CHECK_EQ(sat.exit_code, 0);
    CHECK_EQ(sat.out, "satisfied\nL: 0\n");

    RunResult unsat = run_cli("mso -", run_cli("gen bcycle 3").out);
    CHECK_EQ(unsat.exit_code, 2);
    CHECK_EQ(unsat.out, "unsatisfied\n");
    CHECK(contains(unsat.err, "failing component: 0 1 2 3 4 5"));
}

TEST_CASE("the component cap is configurable by flag and environment") {
    std::string input = "ternary 3\n0 1 2\n2 1 0\n";
    RunResult capped = run_cli("mso -", input, "BETPO_MAX_COMPONENT=2");
    CHECK_EQ(capped.exit_code, 1);
    CHECK(contains(capped.err, "exceeds the exhaustive quantification cap 2"));

    RunResult overridden = run_cli("mso - --max-component 5", input, "BETPO_MAX_COMPONENT=2");
    CHECK_EQ(overridden.exit_code, 0);
    CHECK_EQ(overridden.out, "satisfied\nL: 0\n");

    RunResult junk = run_cli("mso -", input, "BETPO_MAX_COMPONENT=pony");
    CHECK_EQ(junk.exit_code, 1);
}

TEST_CASE("reconstructibility verdicts") {
    RunResult yes = run_cli("reconstructible -", run_cli("gen chain 4").out);
    CHECK_EQ(yes.exit_code, 0);
    CHECK_EQ(yes.out, "yes\n");

    RunResult no = run_cli("reconstructible -", run_cli("gen example5").out);
    CHECK_EQ(no.exit_code, 2);
    CHECK_EQ(no.out, "no\n");
}

TEST_CASE("extremal graph as edge list and DOT") {
    RunResult plain = run_cli("ext -", run_cli("gen bcycle 2").out);
    CHECK_EQ(plain.exit_code, 0);
    CHECK_EQ(plain.out, "vertices: 0 2\n0 2\n");

    RunResult dot = run_cli("ext - --dot", run_cli("gen bcycle 2").out);
    CHECK_EQ(dot.exit_code, 0);
    CHECK_EQ(dot.out, "graph ext {\n  0;\n  2;\n  0 -- 2;\n}\n");
    CHECK(valid_dot(dot.out));

    RunResult bigger = run_cli("ext - --dot", run_cli("gen bcycle 5").out);
    CHECK(valid_dot(bigger.out));
}

TEST_CASE("generated files parse back to the library objects") {
    CHECK(parse_poset_text(run_cli("gen random 8 0.3 42").out) == random_poset(8, 0.3, 42));
    CHECK(parse_poset_text(run_cli("gen chain 0").out) == Poset(0));
    CHECK(parse_poset_text(run_cli("gen example5").out) == example5());
    CHECK(parse_structure_text(run_cli("gen bcycle 4").out) == b_cycle(4));

    RunResult bad = run_cli("gen bcycle 1");
    CHECK_EQ(bad.exit_code, 1);
    CHECK(contains(bad.err, "at least 2"));
    RunResult odd = run_cli("gen fence 3");
    CHECK_EQ(odd.exit_code, 1);
    CHECK(contains(odd.err, "even"));
}

TEST_CASE("exhaustive oracle subcommands") {
    RunResult scan = run_cli("oracle scan 3");
    CHECK_EQ(scan.exit_code, 0);
    CHECK_EQ(scan.out,
             "n=3: 8 structures, 4 accepted, 4 rejected, decision and enumeration agree\n");

    RunResult two = run_cli("oracle count -", run_cli("bet -", run_cli("gen chain 3").out).out);
    CHECK_EQ(two.exit_code, 0);
    CHECK_EQ(two.out, "2\n");

    RunResult zero = run_cli("oracle count -", run_cli("gen bcycle 3").out);
    CHECK_EQ(zero.exit_code, 2);
    CHECK_EQ(zero.out, "0\n");
}

TEST_CASE("parse failures exit 1 and name the line") {
    RunResult r = run_cli("check -", "ternary 3\n0 1\n");
    CHECK_EQ(r.exit_code, 1);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "error: line 2: expected 3 integers"));

    RunResult kind = run_cli("bet -", "ternary 3\n0 1 2\n");
    CHECK_EQ(kind.exit_code, 1);
    CHECK(contains(kind.err, "expected a 'poset' file"));

    RunResult cyc = run_cli("bet -", "poset 2\n0 1\n1 0\n");
    CHECK_EQ(cyc.exit_code, 1);
    CHECK(contains(cyc.err, "generators force"));
}

TEST_CASE("files are read from paths as well as stdin") {
    TempDir dir;
    fs::path f = dir.file("s.ternary");
    spit(f, "ternary 3\n0 1 2\n2 1 0\n");
    RunResult r = run_cli("check " + f.string());
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(r.out, "accepted\n");

    RunResult missing = run_cli("check " + dir.file("nope").string());
    CHECK_EQ(missing.exit_code, 1);
    CHECK(contains(missing.err, "error:"));
}
