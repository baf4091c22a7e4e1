#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "gevreylab/config.hpp"
#include "gevreylab/runner.hpp"
#include "gevreylab/spectral.hpp"

namespace {

std::optional<std::pair<double, double>> parse_range(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--range expects lo:hi");
    return std::make_pair(gvl::parse_real(s.substr(0, colon), "--range"),
                          gvl::parse_real(s.substr(colon + 1), "--range"));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gevreylab: pseudospectral mKdV / third-order NLS runs with "
        "analyticity-radius diagnostics"};
    app.require_subcommand(1);

    std::string config_path, suite, schedule_path, range_text, glob, out_path;
    std::uint64_t seed = 42;
    long samples = 1000000, mc_samples = 400000;
    int trials = 200;

    auto* sim = app.add_subcommand("simulate", "run one configured experiment");
    sim->add_option("config", config_path, "experiment config file")
        ->required();

    auto* cont = app.add_subcommand(
        "continue", "window-by-window continuation with a sigma schedule");
    cont->add_option("config", config_path, "experiment config file")
        ->required();

    auto* verify =
        app.add_subcommand("verify", "run an inequality verification suite");
    verify
        ->add_option("suite", suite,
                     "exp_lemma | ximed | kernel | trilinear | strichartz | all")
        ->required();
    verify->add_option("--seed", seed, "base RNG seed");
    verify->add_option("--samples", samples, "samples per inequality suite");
    verify->add_option("--mc-samples", mc_samples,
                       "base sample count for the kernel integral");
    verify->add_option("--trials", trials, "ratio-protocol trials");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* fit = app.add_subcommand("fit", "power-law fit of a sigma schedule");
    fit->add_option("schedule", schedule_path, "schedule.csv from continue")
        ->required();
    fit->add_option("--range", range_text, "T range lo:hi for the fit");

    auto* sweep =
        app.add_subcommand("sweep", "run every config matching a glob");
    sweep->add_option("glob", glob, "config file pattern, e.g. 'configs/*.cfg'")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return gvl::runner::run_simulate(
                gvl::Config::parse_file(config_path), std::cout);
        if (cont->parsed())
            return gvl::runner::run_continuation(
                gvl::Config::parse_file(config_path), std::cout);
        if (verify->parsed()) {
            gvl::runner::VerifyOptions opts;
            opts.seed = seed;
            opts.samples = samples;
            opts.mc_samples = mc_samples;
            opts.trials = trials;
            if (!out_path.empty()) opts.out = out_path;
            return gvl::runner::run_verify(suite, opts, std::cout);
        }
        if (fit->parsed())
            return gvl::runner::run_fit(schedule_path, parse_range(range_text),
                                        std::cout);
        if (sweep->parsed()) return gvl::runner::run_sweep(glob, std::cout);
    } catch (const gvl::spectral::trust_radius_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gvl::runner::kValidationError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gvl::runner::kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return gvl::runner::kNumericalFailure;
    }
    return gvl::runner::kValidationError;
}
