#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "golden_cases.hpp"
#include "spinres/commands.hpp"
#include "test_support.hpp"

using namespace spinres;
using spinres::test::pi;
namespace fs = std::filesystem;

namespace {

cli::ParamInput freq(double w0, double w1, double w)
{
    cli::ParamInput in;
    in.omega0 = w0;
    in.omega1 = w1;
    in.omega = w;
    return in;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / "spinres_test_cli";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, const fs::path& out)
{
    const std::string cmd = std::string(SPINRES_CLI_PATH) + " " + args + " --out " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_cli_raw(const std::string& args)
{
    const std::string cmd = std::string(SPINRES_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("format_number is locale independent and round trips")
{
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1) == "0.10000000000000001");
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::stod(format_number(x)) == x);
    }
}

TEST_CASE("read_csv inverts write_csv and rejects garbage")
{
    TransitionCurve curve;
    curve.add_meta("command", std::string("evolve"));
    curve.add_meta("omega", 1.25);
    curve.columns = {"tau", "a", "b"};
    curve.rows = {{0.0, 0.0, 1.0}, {0.5, 0.25, 0.75}};
    std::ostringstream os;
    write_csv(curve, os);
    CHECK(os.str() == "# command=evolve\n# omega=1.25\ntau,a,b\n0,0,1\n0.5,0.25,0.75\n");

    std::istringstream is(os.str());
    const TransitionCurve back = read_csv(is);
    CHECK(back.meta == curve.meta);
    CHECK(back.columns == curve.columns);
    CHECK(back.rows == curve.rows);

    for (const char* bad : {"", "# only=meta\n", "tau,a\n0,abc\n", "tau,a\n0\n", "tau,a\n0,1\n# late=meta\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS(read_csv(in));
    }
}

TEST_CASE("TransitionCurve::validate")
{
    TransitionCurve c;
    c.columns = {"tau", "w"};
    c.rows = {{0.0, 0.2}, {1.0, 0.3}};
    CHECK_NOTHROW(c.validate());
    c.rows.push_back({1.0, 0.1});
    CHECK_THROWS(c.validate());
    c.rows.back() = {2.0, 1.5};
    CHECK_THROWS(c.validate());
}

TEST_CASE("parameter groups")
{
    cli::ParamInput in = freq(1.0, 0.5, 0.3);
    CHECK(in.resolve().field == doctest::Approx(std::hypot(1.0, 0.5)));
    in.theta = 0.2;
    CHECK_THROWS_AS(in.resolve(), std::invalid_argument);

    cli::ParamInput phys;
    phys.field = 2.0;
    phys.theta = 0.4;
    phys.omega = 1.0;
    const FieldParams p = phys.resolve();
    CHECK(p.gamma == 1.0);
    CHECK(p.field == 2.0);
    phys.omega.reset();
    CHECK_THROWS_AS(phys.resolve(), std::invalid_argument);

    cli::ParamInput half;
    half.omega0 = 1.0;
    half.omega = 1.0;
    CHECK_THROWS_AS(half.resolve(), std::invalid_argument);
}

TEST_CASE("evolve: no transverse field means no transitions")
{
    cli::EvolveOptions opts;
    opts.params = freq(1.0, 0.0, 0.4);
    const TransitionCurve c = cli::evolve_curve(opts);
    REQUIRE(c.rows.size() == 201);
    for (const auto& row : c.rows) {
        CHECK(row[1] == 0.0);
        CHECK(row[2] == 0.0);
        CHECK(row[3] == 0.0);
    }
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cli::cmd_evolve(opts, out, err) == cli::kExitOk);
    CHECK(out.str().find("tau,w1937,w1954,w_unified\n") != std::string::npos);
}

TEST_CASE("evolve: weak resonance peaks at tau = pi / Omega")
{
    cli::EvolveOptions opts;
    opts.params = freq(1.0, 1e-3, 1.0);
    opts.samples = 401;
    const TransitionCurve c = cli::evolve_curve(opts);
    const auto col = c.column("w1954");
    std::size_t best = 0;
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
        if (c.rows[k][col] > c.rows[best][col]) {
            best = k;
        }
    }
    const double big_omega = std::stod(c.meta_value("big_omega"));
    CHECK(c.rows[best][0] == doctest::Approx(pi / big_omega));
    CHECK(std::abs(c.rows[best][col] - 1.0) < 1e-12);
}

TEST_CASE("evolve: second resonance follows sin^4")
{
    cli::EvolveOptions opts;
    opts.params = freq(1.0, 1.0, 1.0);
    opts.samples = 257;
    opts.tau_max = 25.0;
    const TransitionCurve c = cli::evolve_curve(opts);
    for (const auto& row : c.rows) {
        CHECK(std::abs(row[3] - std::pow(std::sin(0.5 * row[0]), 4)) < 1e-12);
    }
}

TEST_CASE("evolve: oracle columns track the closed forms")
{
    cli::EvolveOptions opts;
    opts.params = freq(1.0, 0.8, 1.3);
    opts.samples = 21;
    opts.tau_max = 6.0;
    opts.t1 = 0.7;
    opts.with_oracle = true;
    const TransitionCurve c = cli::evolve_curve(opts);
    REQUIRE(c.columns.size() == 7);
    for (const auto& row : c.rows) {
        CHECK(std::abs(row[1] - row[4]) < 1e-6);
        CHECK(std::abs(row[2] - row[5]) < 1e-6);
        CHECK(std::abs(row[3] - row[6]) < 1e-6);
    }
}

TEST_CASE("evolve: invalid input is a validation failure")
{
    std::ostringstream out;
    std::ostringstream err;
    cli::EvolveOptions opts;
    opts.params = freq(1.0, -0.5, 0.4);
    CHECK(cli::cmd_evolve(opts, out, err) == cli::kExitValidation);
    CHECK_FALSE(err.str().empty());
    opts.params = freq(1.0, 0.5, 0.4);
    opts.samples = 1;
    CHECK(cli::cmd_evolve(opts, out, err) == cli::kExitValidation);
    opts.samples = 10;
    opts.params = freq(1.0, 0.0, 1.0);  // Omega = 0
    CHECK(cli::cmd_evolve(opts, out, err) == cli::kExitValidation);
}

TEST_CASE("sweep over omega: weak driving resonance and static limit")
{
    cli::SweepSpec spec;
    spec.variable = cli::SweepSpec::Variable::omega;
    spec.start = 0.0;
    spec.stop = 2.0;
    spec.steps = 201;
    spec.fixed = freq(1.0, 0.01, 0.0);
    spec.fixed.omega.reset();
    const TransitionCurve c = cli::sweep_curve(spec);
    REQUIRE(c.columns == std::vector<std::string>{"omega", "peak_w1937", "peak_w1954", "peak_w_unified"});

    std::size_t best = 0;
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
        if (c.rows[k][2] > c.rows[best][2]) {
            best = k;
        }
    }
    CHECK(c.rows[best][0] == doctest::Approx(1.0));
    CHECK(c.rows[best][2] >= 0.999);
    CHECK(c.rows.front()[0] == 0.0);
    CHECK(c.rows.front()[1] == 0.0);
}

TEST_CASE("sweep over omega at strong driving")
{
    cli::SweepSpec spec;
    spec.start = 0.8;
    spec.stop = 1.2;
    spec.steps = 41;
    spec.fixed = freq(1.0, 1.0, 0.0);
    const TransitionCurve c = cli::sweep_curve(spec);
    for (const auto& row : c.rows) {
        if (row[0] < 1.0 - 1e-9) {
            CHECK(row[3] < row[2]);  // kinematic suppression below resonance
        }
    }
}

TEST_CASE("sweep over theta and tau")
{
    cli::SweepSpec spec;
    spec.variable = cli::SweepSpec::Variable::theta;
    spec.start = 0.1;
    spec.stop = 3.0;
    spec.steps = 30;
    spec.fixed = freq(1.0, 1.0, 0.5);
    const TransitionCurve t = cli::sweep_curve(spec);
    CHECK(t.columns.front() == "theta");
    CHECK(t.rows.size() == 30);

    spec.variable = cli::SweepSpec::Variable::tau;
    spec.start = 0.0;
    spec.stop = 10.0;
    const TransitionCurve v = cli::sweep_curve(spec);
    CHECK(v.columns.front() == "tau");

    spec.steps = 1;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cli::cmd_sweep(spec, out, err) == cli::kExitValidation);
}

TEST_CASE("compare: commuting case is exact")
{
    cli::CompareOptions opts;
    opts.params = freq(1.0, 0.0, 0.6);
    const cli::CompareReport r = cli::compare_report(opts);
    CHECK(r.worst() < 1e-12);
}

TEST_CASE("compare: random configuration seeded with 42 passes at default dt")
{
    test::RandomField gen(42);
    const DerivedFrequencies d = gen.next();
    cli::CompareOptions opts;
    opts.params = freq(d.omega0, d.omega1, d.omega);
    opts.samples = 51;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cli::cmd_compare(opts, out, err) == cli::kExitOk);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(cli::compare_report(opts).worst() < 1e-6);
}

TEST_CASE("compare: exit status follows the tolerance")
{
    cli::CompareOptions opts;
    opts.params = freq(1.0, 0.7, 0.9);
    opts.samples = 11;
    opts.dt = 0.05;
    const double worst = cli::compare_report(opts).worst();
    REQUIRE(worst > 0.0);
    std::ostringstream out;
    std::ostringstream err;
    opts.tol = worst * 2.0;
    CHECK(cli::cmd_compare(opts, out, err) == cli::kExitOk);
    opts.tol = worst / 2.0;
    CHECK(cli::cmd_compare(opts, out, err) == cli::kExitTolerance);
    opts.dt = 10.0;  // resolution guard
    CHECK(cli::cmd_compare(opts, out, err) == cli::kExitValidation);
}

TEST_CASE("plotscript references columns by name and never embeds data")
{
    const fs::path dir = scratch_dir();
    cli::EvolveOptions opts;
    opts.params = freq(1.0, 0.5, 1.0);
    {
        std::ofstream csv(dir / "evolve.csv");
        write_csv(cli::evolve_curve(opts), csv);
    }
    std::ostringstream err;
    REQUIRE(cli::cmd_plotscript(dir / "evolve.csv", dir / "evolve.py", err) == cli::kExitOk);
    const std::string script = slurp(dir / "evolve.py");
    for (const char* name : {"\"tau\"", "\"w1937\"", "\"w1954\"", "\"w_unified\""}) {
        CHECK(script.find(name) != std::string::npos);
    }
    CHECK(script.find("0.0314") == std::string::npos);

    cli::SweepSpec spec;
    spec.start = 0.5;
    spec.stop = 1.5;
    spec.steps = 5;
    spec.fixed = freq(1.0, 0.5, 0.0);
    {
        std::ofstream csv(dir / "sweep.csv");
        write_csv(cli::sweep_curve(spec), csv);
    }
    REQUIRE(cli::cmd_plotscript(dir / "sweep.csv", dir / "sweep.py", err) == cli::kExitOk);
    const std::string sweep_script = slurp(dir / "sweep.py");
    CHECK(sweep_script.find("X = \"omega\"") != std::string::npos);
    CHECK(sweep_script.find("\"peak_w_unified\"") != std::string::npos);

    CHECK(cli::cmd_plotscript(dir / "missing.csv", dir / "x.py", err) == cli::kExitValidation);
    {
        std::ofstream garbled(dir / "garbled.csv");
        garbled << "tau,w\n1,2,3\n";
    }
    CHECK(cli::cmd_plotscript(dir / "garbled.csv", dir / "x.py", err) == cli::kExitValidation);
}

TEST_CASE("binary: determinism, goldens and exit codes")
{
    const fs::path dir = scratch_dir();
    for (const auto& g : test::kGoldenCases) {
        CAPTURE(g.file);
        const fs::path a = dir / ("a_" + std::string(g.file));
        const fs::path b = dir / ("b_" + std::string(g.file));
        REQUIRE(run_cli(std::string(g.args), a) == 0);
        REQUIRE(run_cli(std::string(g.args), b) == 0);
        CHECK(slurp(a) == slurp(b));
        CHECK(slurp(a) == slurp(fs::path(SPINRES_GOLDEN_DIR) / g.file));
    }
    CHECK(run_cli_raw("evolve --omega0 1 --omega1 -1 --omega 1") == 1);
    CHECK(run_cli_raw("evolve --omega0 1 --omega1 1 --theta 1 --omega 1") == 1);
    CHECK(run_cli_raw("compare --omega0 1 --omega1 0 --omega 0.5") == 0);
    CHECK(run_cli_raw("compare --omega0 1 --omega1 1 --omega 1 --dt 0.6") == 1);
    CHECK(run_cli_raw("compare --omega0 1 --omega1 1 --omega 1 --dt 0.05 --tol 1e-12") == 2);
    CHECK(run_cli_raw("plotscript /nonexistent/curve.csv") == 1);
    CHECK(run_cli_raw("bogus") == 1);
}
