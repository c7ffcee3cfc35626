#pragma once

namespace logcoef {

/// Numerical thresholds shared by every module. Kept in one place so that a
/// change to, say, the region slack is visible everywhere it matters.
struct Tolerances {
    /// |a0| at or below this is treated as a zero constant term.
    static constexpr double zero_constant = 1e-12;
    /// Allowed deviation of f0 from 0 and f1 from 1 for a normalized f.
    static constexpr double normalization = 1e-12;
    /// Slack on the constraints 0 <= x <= 1, 0 <= y <= 1 - x^2.
    static constexpr double region_slack = 1e-12;
    /// A Schwarz triple is Carlson-feasible iff every slack is >= -carlson_slack.
    static constexpr double carlson_slack = 1e-12;
    /// |rotation| must equal 1 to this precision.
    static constexpr double unit_modulus = 1e-14;
    /// Converged Newton limits closer than this are the same critical point.
    static constexpr double dedup_distance = 1e-8;
    /// Objective values this close are tied; ties break on smaller x, then y.
    static constexpr double value_tie = 1e-12;
    /// Dense-grid sweep may exceed the analytic maximum by at most this much.
    static constexpr double certification = 1e-6;
    /// Bracketing bisection stops once the bracket is this narrow.
    static constexpr double bisection = 1e-14;
    /// Step for the finite-difference Jacobian of the analytic gradient.
    static constexpr double jacobian_step = 1e-7;
};

/// Default truncation order: gamma_1..gamma_4 plus guard terms.
inline constexpr int kDefaultOrder = 8;

}  // namespace logcoef
