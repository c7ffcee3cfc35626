#pragma once

#include "logcoef/families.hpp"
#include "logcoef/schwarz.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logcoef {

struct SearchOptions {
    long iterations = 100000;
    std::uint64_t seed = 1;
    bool real_only = false;
    int max_degree = 4;
    /// Independent restarts with seeds seed, seed + 1, ...; each gets the
    /// full iteration budget.
    int restarts = 1;
};

struct SearchResult {
    Family family = Family::F1;
    /// Largest |gamma_3| seen; reproducible from `witness`.
    double best_value = 0.0;
    BlaschkeProduct witness;
    /// Objective evaluations actually spent, over all restarts.
    long iterations = 0;
    bool real_only = false;
    /// The proven |gamma_3| bound for the family.
    double upper_bound = 0.0;
    /// Sharp bound for real a2, set when real_only.
    std::optional<double> remark_value;
    /// Best value after the sampling phase and after every refinement round
    /// of the winning restart; non-decreasing.
    std::vector<double> history;
};

/// |gamma_3| of the family member generated by w.
double witness_value(Family family, const BlaschkeProduct& w);

/// Seed of the index-th global sample of a restart.
std::uint64_t sample_seed(std::uint64_t restart_seed, long index);

/// Empirical lower bound for sup |gamma_3| over the family.
///
/// 70% of the budget samples Blaschke products of degree 1..max_degree
/// (cycling); the rest refines the ten best samples coordinate by
/// coordinate, keeping improvements and halving the step after a round
/// without one (40 rounds per candidate). Deterministic in the options.
SearchResult search_lower_bound(Family family, const SearchOptions& options);

struct GapRecord {
    double absolute = 0.0;  // upper_bound - best_value
    double relative = 0.0;  // absolute / upper_bound
};

/// Distance from the empirical lower bound to the proven upper bound. The
/// general bounds are not known to be attained, so a positive gap is an
/// open interval, not a defect. Throws FamilyMismatch.
GapRecord gap_report(Family family, const SearchResult& result);

}  // namespace logcoef
