#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "johnsimplex/covering.hpp"
#include "johnsimplex/io.hpp"
#include "johnsimplex/report.hpp"
#include "johnsimplex/sampling.hpp"

namespace johnsimplex::cli {

enum class Command { Mvs, Dilation, John, Counterexample, Sweep, RandomTrials, Render };

std::string to_string(Command command);

enum class MvsChoice { Auto, Exact, LocalSearch };

struct RunConfig {
    Command command = Command::Mvs;
    ScalarMode mode = ScalarMode::Exact;
    double tol = kDefaultFloatTolerance;
    std::uint64_t seed = 0;
    std::uint64_t enum_cap = MvsOptions{}.enum_cap;
    unsigned threads = 0;

    // point input: a file, or a sampled body
    std::optional<std::filesystem::path> input;
    std::optional<PointFormat> format;
    std::optional<Body> sample;
    std::size_t n = 20;
    std::size_t dim = 2;

    std::optional<std::filesystem::path> output;  // JSON report; stdout when empty

    MvsChoice mvs = MvsChoice::Auto;
    DilationSign sign = DilationSign::Positive;
    std::optional<std::vector<std::size_t>> simplex;  // dilation: vertex indices into X

    std::string epsilon = "1/5";
    std::string delta = "1/5";
    std::vector<std::string> epsilons = {"1/20", "1/10", "3/20", "1/5"};
    std::vector<std::string> deltas = {"1/20", "1/10", "3/20", "1/5"};
    std::optional<std::filesystem::path> csv;  // sweep table
    bool with_bounds = false;

    std::size_t trials = 100;
    std::optional<std::filesystem::path> svg;
    std::string scene = "cover";  // render: cover | counterexample
    std::string triangle = "ADE";
};

struct RunResult {
    int exit_code = 0;
    Json report;               // null when the run failed before producing results
    std::string diagnostic;    // human-readable reason for a nonzero exit code
};

/// Executes one command. Never throws: input errors map to exit code 1,
/// violated theorem bounds (or internal solver failures) to exit code 2.
RunResult run(const RunConfig& config);

/// Parses argv into a RunConfig. Returns the CLI11 exit code through
/// `exit_code` when parsing ends the program (help, bad flags).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, int& exit_code);

}  // namespace johnsimplex::cli
