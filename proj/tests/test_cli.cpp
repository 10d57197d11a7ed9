#include "doctest.h"

#include "toric/cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

using toric::cli::Command;
using toric::cli::run_command;

namespace {

std::string fixture(const std::string& name) { return std::string(TORIC_FIXTURE_DIR) + "/" + name; }

Command cmd(std::string verb, std::vector<std::string> files) {
    Command c;
    c.verb = std::move(verb);
    for (auto& f : files) c.inputs.push_back(fixture(f));
    return c;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("facets and blend") {
    auto r = run_command(cmd("facets", {"square.json"}));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "facets (4)"));
    CHECK(contains(r.output, "-x1 + 1 >= 0"));
    r = run_command(cmd("blend", {"segment.json"}));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "-x1 + 1"));
}

TEST_CASE("verify") {
    auto ok = run_command(cmd("verify", {"trapezoid_beta_tilde.json"}));
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "rational linear precision: yes"));
    auto bad = run_command(cmd("verify", {"trapezoid.json"}));
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "4. linear precision: FAIL"));
    auto sq = run_command(cmd("verify", {"square.json"}));
    CHECK(sq.exit_code == 0);
}

TEST_CASE("fiber products") {
    auto r = run_command(cmd("tfp", {"square.json", "trapezoid_beta_tilde.json"}));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fiber product with 10 points"));
    CHECK(contains(r.output, "z[2][2][2]"));
    auto c = cmd("tfp", {"square.json", "trapezoid_beta_tilde.json"});
    c.form = toric::DenominatorForm::C;
    CHECK(run_command(c).exit_code == 0);

    auto bad = run_command(cmd("tfp", {"square_diagonal_grading.json", "trapezoid.json"}));
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.error, "no affine degree map"));
}

TEST_CASE("horn verbs") {
    auto r = run_command(cmd("horn-tfp", {"square.horn.json", "trapezoid.horn.json", "grading.json"}));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(1,1,1)"));
    CHECK(contains(r.output, "(2,2,2)"));

    auto v = run_command(cmd("horn-validate", {"square.horn.json"}));
    CHECK(v.exit_code == 0);
    auto bad = run_command(cmd("horn-validate", {"bad_horn_lambda.json"}));
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "witness: coordinates sum to 5/4 at u=(1,1,1,1)"));

    auto m = run_command(cmd("horn-minimize", {"trapezoid.horn.json"}));
    CHECK(m.exit_code == 0);
    CHECK(contains(m.output, "rows: 6 -> 6"));
}

TEST_CASE("mle and ips") {
    auto c = cmd("mle", {"square.json"});
    c.data = "3,1,1,1";
    c.horn = fixture("square.horn.json");
    auto r = run_command(c);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "exact MLE: (4/9, 2/9, 2/9, 1/9)"));
    CHECK(contains(r.output, "Birch residual: (0, 0, 0) (zero)"));
    CHECK(contains(r.output, "Horn parametrization: agrees"));

    auto t = cmd("mle", {"square.json", "trapezoid_beta_tilde.json"});
    t.data = "1,1,1,1,1,1,1,1,1,1";
    r = run_command(t);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(3/40, 3/20, 3/40, 3/40, 3/20, 3/40, 1/10, 1/10, 1/10, 1/10)"));
    CHECK(contains(r.output, "product formula: agrees"));

    auto ng = cmd("mle", {"square.json"});
    ng.data = "1,1,0,0";
    CHECK(run_command(ng).exit_code == 2);

    auto ips = cmd("ips", {"square.json"});
    ips.data = "3,1,1,1";
    ips.max_iter = 1;
    CHECK(run_command(ips).exit_code == 1);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run_command(cmd("verify", {"bad_weights.json"})).exit_code == 2);
    CHECK(contains(run_command(cmd("verify", {"bad_weights.json"})).error, "$.weights[1]"));
    Command missing;
    missing.verb = "facets";
    missing.inputs = {"/nonexistent.json"};
    CHECK(run_command(missing).exit_code == 2);
    CHECK(run_command(cmd("facets", {})).exit_code == 2);
    CHECK(run_command(cmd("nonsense", {"square.json"})).exit_code == 2);
    auto nodata = cmd("mle", {"square.json"});
    CHECK(run_command(nodata).exit_code == 2);
}

TEST_CASE("json output is deterministic") {
    auto c = cmd("verify", {"trapezoid_beta_tilde.json"});
    c.json = true;
    c.seed = 7;
    auto a = run_command(c);
    auto b = run_command(c);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"ok\": true"));
    auto m = cmd("mle", {"square.json"});
    m.data = "3,1,1,1";
    m.json = true;
    auto j = run_command(m).output;
    CHECK(contains(j, "\"4/9\""));
    CHECK(j == run_command(m).output);
}

TEST_CASE("executable") {
    const char* exe = std::getenv("TORIC_PRECISION_CLI");
    if (!exe) return;
    auto run = [&](const std::string& args) {
        std::string line = std::string(exe) + " " + args + " >/dev/null 2>&1";
        int status = std::system(line.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run("verify " + fixture("trapezoid_beta_tilde.json")) == 0);
    CHECK(run("horn-validate " + fixture("bad_horn_lambda.json")) == 1);
    CHECK(run("verify " + fixture("bad_weights.json")) == 2);
    CHECK(run("--no-such-flag") == 2);

    std::string line = std::string(exe) + " mle " + fixture("square.json") + " --data 3,1,1,1 --output json";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(line.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
    CHECK(contains(out, "\"1/9\""));
}
