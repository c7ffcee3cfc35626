#pragma once

#include "logcoef/families.hpp"
#include "logcoef/tolerances.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace logcoef::cli {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::string command;
    std::optional<Family> family;
    double grid_step = 0.05;
    double newton_tol = 1e-12;
    long iterations = 100000;
    std::uint64_t seed = 1;
    int max_degree = 4;
    int restarts = 1;
    bool real_only = false;
    OutputFormat format = OutputFormat::Text;
    // gamma
    Complex c1{};
    Complex c2{};
    Complex c3{};
    int order = kDefaultOrder;
    // verify-carlson
    long samples = 100000;
    // milin
    std::string function = "koebe";
    int n = 3;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one subcommand and writes its report to `out`. Returns 0 on
/// success, 2 when a checked invariant fails, 1 on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 12 significant digits, "%.12g".
std::string format_number(double v);

}  // namespace logcoef::cli
