#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gevreylab/config.hpp"
#include "gevreylab/powerfit.hpp"
#include "gevreylab/runner.hpp"

using namespace gvl;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "gevreylab_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kPlaneWaveCfg = R"(
# exact single-mode reference run
equation.kind = tnls
equation.alpha = 1
equation.beta = 1
equation.gamma = 1
grid.n = 64
grid.length = 2pi
data.family = plane_wave
data.A = 1
data.k = 1
integrator.dt = 1e-3
run.T = 0.2
run.sample_dt = 0.02
diag.sigmas = 0,0.1
seed = 42
)";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("config: parse, round trip, typed getters") {
    const Config cfg = Config::parse(kPlaneWaveCfg, "inline");
    CHECK(cfg.get_string("equation.kind") == "tnls");
    CHECK(cfg.get_real("grid.length") == doctest::Approx(2 * pi));
    CHECK(cfg.get_int("grid.n") == 64);
    CHECK(cfg.get_real_list("diag.sigmas") ==
          std::vector<double>{0.0, 0.1});

    const Config again = Config::parse(cfg.serialize(), "round-trip");
    CHECK(again == cfg);

    CHECK(parse_real("40pi", "t") == doctest::Approx(40 * pi));
    CHECK(parse_real("-pi", "t") == doctest::Approx(-pi));
    CHECK(parse_real("2.5", "t") == doctest::Approx(2.5));
    CHECK_THROWS_AS(parse_real("woof", "t"), std::invalid_argument);
}

TEST_CASE("config: line-precise parse errors") {
    try {
        Config::parse("grid.n = 64\nnonsense line\n", "bad.cfg");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bad.cfg:2") != std::string::npos);
    }
    CHECK_THROWS_AS(Config::parse("a = 1\na = 2\n", "dup"),
                    std::invalid_argument);
}

TEST_CASE("fit_power_law: constructed series") {
    std::vector<std::pair<double, double>> series;
    for (int i = 1; i <= 10; ++i) {
        const double t = 1.0 + 0.7 * i;
        series.push_back({t, 2.0 * std::pow(t, -4.0 / 3.0)});
    }
    const auto fit = fit_power_law(series, 0.0, 100.0);
    CHECK(fit.exponent == doctest::Approx(-4.0 / 3.0).epsilon(1e-10));
    CHECK(fit.coefficient == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0));

    std::vector<std::pair<double, double>> flat;
    for (int i = 1; i <= 8; ++i) flat.push_back({double(i), 0.37});
    const auto cfit = fit_power_law(flat, 0.0, 100.0);
    CHECK(cfit.exponent == doctest::Approx(0.0));

    std::vector<std::pair<double, double>> few = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
    CHECK_THROWS_AS(fit_power_law(few, 0.0, 100.0), std::invalid_argument);
}

TEST_CASE("simulate: golden CSV header and plane-wave mass constancy") {
    const fs::path dir = fresh_dir("plane_wave");
    Config cfg = Config::parse(kPlaneWaveCfg, "inline");
    cfg.set("run.output", dir.string());
    std::ostringstream log;
    CHECK(runner::run_simulate(cfg, log) == runner::kOk);

    const std::string csv = slurp(dir / "diagnostics.csv");
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header ==
          "t,mass,energy,momentum_re,momentum_im,sigma_hat,"
          "M_sigma_0,M_sigma_0.1,trust_0,trust_0.1");

    // mass column constant to 1e-10 relative
    std::istringstream rows(csv.substr(csv.find('\n') + 1));
    std::string line;
    double mass0 = -1;
    while (std::getline(rows, line)) {
        std::istringstream row(line);
        std::string tok;
        std::getline(row, tok, ',');
        std::getline(row, tok, ',');
        const double mass = std::stod(tok);
        if (mass0 < 0) mass0 = mass;
        CHECK(std::abs(mass - mass0) <= 1e-10 * mass0);
    }
    CHECK(mass0 == doctest::Approx(2 * pi).epsilon(1e-12));
}

TEST_CASE("simulate: zero data produces identically zero columns") {
    const fs::path dir = fresh_dir("zero");
    Config cfg = Config::parse(kPlaneWaveCfg, "inline");
    cfg.set("data.A", "0");
    cfg.set("run.output", dir.string());
    std::ostringstream log;
    CHECK(runner::run_simulate(cfg, log) == runner::kOk);
    std::istringstream rows(slurp(dir / "diagnostics.csv"));
    std::string line;
    std::getline(rows, line);  // header
    while (std::getline(rows, line)) {
        std::istringstream row(line);
        std::string tok;
        int col = 0;
        while (std::getline(row, tok, ',')) {
            // columns: t, mass, energy, momentum, gevrey... all zero except t;
            // sigma_hat is nan for an empty spectrum
            if (col >= 1 && tok != "nan" && tok != "1" && tok != "0")
                CHECK(std::stod(tok) == 0.0);
            ++col;
        }
    }
}

TEST_CASE("determinism: identical config gives byte-identical outputs") {
    const fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
    Config cfg = Config::parse(kPlaneWaveCfg, "inline");
    cfg.set("data.family", "random_band");
    cfg.set("data.k_max", "6");
    cfg.set("data.A", "0.4");
    std::ostringstream log;
    cfg.set("run.output", d1.string());
    runner::run_simulate(cfg, log);
    cfg.set("run.output", d2.string());
    runner::run_simulate(cfg, log);
    CHECK(slurp(d1 / "diagnostics.csv") == slurp(d2 / "diagnostics.csv"));
    const std::string s1 = slurp(d1 / "summary.json");
    const std::string s2 = slurp(d2 / "summary.json");
    CHECK(s1 == s2);
}

TEST_CASE("verify: unknown suite is rejected, reports are reproducible") {
    std::ostringstream log;
    runner::VerifyOptions opts;
    CHECK_THROWS_AS(runner::run_verify("bogus", opts, log),
                    std::invalid_argument);

    opts.samples = 20000;
    opts.seed = 9;
    const fs::path dir = fresh_dir("verify");
    opts.out = dir / "r1.json";
    CHECK(runner::run_verify("ximed", opts, log) == runner::kOk);
    opts.out = dir / "r2.json";
    CHECK(runner::run_verify("ximed", opts, log) == runner::kOk);
    CHECK(slurp(dir / "r1.json") == slurp(dir / "r2.json"));
}

TEST_CASE("fit subcommand parses a schedule file") {
    const fs::path dir = fresh_dir("fit");
    {
        std::ofstream out(dir / "schedule.csv");
        out << "T,sigma,budget_counter\n";
        for (int i = 1; i <= 12; ++i) {
            const double t = 0.5 * i;
            out << t << ',' << 3.0 * std::pow(t, -0.75) << ',' << i << '\n';
        }
    }
    std::ostringstream out;
    CHECK(runner::run_fit(dir / "schedule.csv", std::nullopt, out) ==
          runner::kOk);
    CHECK(out.str().find("\"exponent\": -0.75") != std::string::npos);
}

TEST_CASE("sweep: runs every matching config in its own directory") {
    const fs::path dir = fresh_dir("sweep");
    for (int i = 0; i < 3; ++i) {
        Config cfg = Config::parse(kPlaneWaveCfg, "inline");
        cfg.set("data.k", std::to_string(i + 1));
        cfg.set("run.T", "0.05");
        cfg.set("run.sample_dt", "0.025");
        cfg.set("run.output", (dir / ("out" + std::to_string(i))).string());
        std::ofstream f(dir / ("case" + std::to_string(i) + ".cfg"));
        f << cfg.serialize();
    }
    std::ostringstream log;
    CHECK(runner::run_sweep((dir / "case*.cfg").string(), log) == runner::kOk);
    for (int i = 0; i < 3; ++i)
        CHECK(fs::exists(dir / ("out" + std::to_string(i)) / "summary.json"));
    CHECK_THROWS_AS(runner::run_sweep((dir / "nope*.cfg").string(), log),
                    std::invalid_argument);
}

TEST_SUITE_END();
