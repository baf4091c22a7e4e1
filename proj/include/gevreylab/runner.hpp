#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "gevreylab/config.hpp"

namespace gvl::runner {

// Exit codes shared with the CLI.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kNumericalFailure = 2;
inline constexpr int kAssertionFailure = 3;

// Evolve one configured experiment; writes config.txt, diagnostics.csv and
// summary.json into the run directory.
int run_simulate(const Config& cfg, std::ostream& log);

// Window-by-window continuation; additionally writes schedule.csv.
int run_continuation(const Config& cfg, std::ostream& log);

struct VerifyOptions {
    std::uint64_t seed = 42;
    long samples = 1000000;   // per inequality suite
    long mc_samples = 400000; // kernel integral base sample count
    int trials = 200;         // ratio-protocol trials
    std::optional<std::filesystem::path> out;
};

// suite in {exp_lemma, ximed, kernel, trilinear, strichartz, all}.
int run_verify(const std::string& suite, const VerifyOptions& opts,
               std::ostream& log);

int run_fit(const std::filesystem::path& schedule_csv,
            std::optional<std::pair<double, double>> range, std::ostream& out);

// Expands a glob over config files and launches independent runs in
// parallel, each writing only to its own directory.
int run_sweep(const std::string& pattern, std::ostream& log);

// "%.17g" float formatting used for all persisted numbers.
std::string g17(double v);

}  // namespace gvl::runner
