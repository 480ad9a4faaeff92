#include <doctest.h>

#include <json.hpp>

#include <jetcalc/errors.hpp>
#include <jetcalc/jobfile.hpp>
#include <jetcalc/textio.hpp>

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

using namespace jetcalc;
using OrderedJson = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary and captures standard output.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(JETCALC_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string job(const char* name) { return std::string(JOBS_DIR) + "/" + name; }

} // namespace

TEST_CASE("job parser wires declarations together") {
    JobFile parsed = parse_job("jetcalc/1\n"
                               "vars x y z\n"
                               "poly q = x*z - 1\n"
                               "point p = (1, 0, 1)\n"
                               "variety X = { q } at p\n"
                               "map f = (x, x*y, z)\n"
                               "jet j = (0 1 ; 0 0 ; 1 0)\n"
                               "divisor D = { x - 1, y }\n"
                               "option s_max 3\n"
                               "command lift X j\n");
    CHECK(parsed.command == "lift");
    CHECK(parsed.args == std::vector<std::string>{"X", "j"});
    CHECK(parsed.polys.at("q").arity() == 3);
    CHECK(parsed.varieties.at("X").base_point ==
          std::vector<Rational>{rat(1), rat(0), rat(1)});
    CHECK(parsed.maps.at("f").target_arity() == 3);
    CHECK(parsed.jets.at("j").order() == 1);
    CHECK(parsed.divisors.at("D").ideal.gens.size() == 2);
    CHECK(parsed.divisors.at("D").user_supplied);
    CHECK(parsed.options.at("s_max") == 3);
}

TEST_CASE("job parser rejects malformed input with positions") {
    auto column_of = [](const std::string& text) {
        try {
            parse_job(text);
        } catch (const ParseError& e) {
            return std::pair<int, int>{e.line, e.column};
        }
        return std::pair<int, int>{-1, -1};
    };
    CHECK(column_of("jetcalc/2\n") == std::pair<int, int>{1, 1});
    CHECK(column_of("jetcalc/1\npoly p = x\ncommand gb p\n") == std::pair<int, int>{2, 1});
    CHECK(column_of("jetcalc/1\nvars x\npoly p = x + w\ncommand gb p\n") ==
          std::pair<int, int>{3, 14});
    CHECK(column_of("jetcalc/1\nvars x\nvariety V = { x - 1 } at (0)\ncommand dim V\n").first ==
          3);
    CHECK(column_of("jetcalc/1\nvars x\npoly p = x\n") == std::pair<int, int>{4, 1});
    CHECK(column_of("jetcalc/1\nvars x\njunk\ncommand gb x\n") == std::pair<int, int>{3, 1});
}

TEST_CASE("printer and parser round-trip on fixtures and random polynomials") {
    auto n3 = make_names({"x", "y", "z"});
    for (const char* text :
         {"0", "1", "-1/2", "x", "y^2 - x^3", "x*y*z + 1/7*z^5 - 3", "-x + y - z"}) {
        Polynomial p = parse_polynomial(text, n3);
        CHECK(parse_polynomial(poly_str(p), n3) == p);
    }
    std::mt19937_64 rng(20250819);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), exp(0, 4), terms(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Term> ts;
        int count = terms(rng);
        for (int i = 0; i < count; ++i) {
            Monomial m = Monomial::one(3);
            for (int v = 0; v < 3; ++v) m.exps[v] = exp(rng);
            ts.push_back({m, rat(num(rng), den(rng))});
        }
        Polynomial p = Polynomial::from_terms(3, ts, n3);
        CHECK(parse_polynomial(poly_str(p), n3) == p);
    }
}

TEST_CASE("sample jobs produce valid reports") {
    struct Sample {
        const char* file;
        const char* flags;
        const char* command;
    };
    for (const Sample s : std::initializer_list<Sample>{
             {"counterexample.job", "--seed 42", "analyze"},
             {"cusp-lift.job", "--seed 7", "lift"},
             {"cusp-stratum.job", "", "stratum-dim"},
             {"blowup-cusp.job", "", "strict-transform"},
             {"theta-cusp.job", "", "theta"},
             {"jd-shear.job", "", "jd"},
             {"eliminate-cubic.job", "", "eliminate"}}) {
        INFO(s.file);
        RunResult r = run_cli(job(s.file) + " " + s.flags);
        CHECK(r.exit_code == 0);
        OrderedJson report = OrderedJson::parse(r.output);
        CHECK(report.at("jetcalc_report") == 1);
        CHECK(report.at("command") == s.command);
        CHECK(report.contains("parameters"));
    }
}

TEST_CASE("analyze job certifies the counterexample") {
    RunResult r = run_cli(job("counterexample.job") + " --seed 42");
    REQUIRE(r.exit_code == 0);
    OrderedJson report = OrderedJson::parse(r.output);
    CHECK(report.at("commutativity") == true);
    const auto& divisors = report.at("divisors");
    REQUIRE(divisors.size() == 1);
    CHECK(divisors[0].at("generators") == OrderedJson::array({"u"}));
    CHECK(divisors[0].at("image_dimension") == 0);
    CHECK(divisors[0].at("exceptional") == true);
    CHECK(divisors[0].at("invariant") == true);
    CHECK(divisors[0].at("preimage_empty") == true);
    for (const auto& row : report.at("dimension_table"))
        CHECK(row.at("dim_f") == row.at("dim_g"));
}

TEST_CASE("reports are byte-identical under a fixed seed") {
    RunResult a = run_cli(job("counterexample.job") + " --seed 42");
    RunResult b = run_cli(job("counterexample.job") + " --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult lifted_a = run_cli(job("cusp-lift.job") + " --seed 9");
    RunResult lifted_b = run_cli(job("cusp-lift.job") + " --seed 9");
    CHECK(lifted_a.output == lifted_b.output);
}

TEST_CASE("exit codes separate findings from errors") {
    // randomized commands refuse to run without a seed
    RunResult unseeded = run_cli(job("cusp-lift.job"));
    CHECK(unseeded.exit_code == 2);
    // fail-fast on findings is opt-in
    RunResult plain = run_cli(job("counterexample.job") + " --seed 42");
    CHECK(plain.exit_code == 0);
    RunResult failfast = run_cli(job("counterexample.job") + " --seed 42 --fail-on-findings");
    CHECK(failfast.exit_code == 1);
    // a missing file and a malformed job are errors
    CHECK(run_cli("/nonexistent.job").exit_code == 2);
    RunResult usage = run_cli(job("cusp-lift.job") + " --order bogus");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("verify command runs the property suites") {
    RunResult r = run_cli(job("verify-all.job") + " --seed 1");
    CHECK(r.exit_code == 0);
    OrderedJson report = OrderedJson::parse(r.output);
    CHECK(report.at("failures") == 0);
    CHECK(report.at("suites").size() == 5);
    for (const auto& [suite, rows] : report.at("suites").items()) {
        INFO(suite);
        CHECK(!rows.empty());
        for (const auto& row : rows) CHECK(row.at("pass") == true);
    }
}
