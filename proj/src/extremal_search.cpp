#include "logcoef/extremal_search.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/optimize.hpp"
#include "logcoef/random.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace logcoef {

namespace {

constexpr int kRefineCandidates = 10;
constexpr int kRefineRounds = 40;
constexpr double kInitialStep = 0.25;
constexpr double kZeroRadiusLimit = 1.0 - 1e-9;

struct Candidate {
    double value = 0.0;
    long index = 0;  // sample index, breaks ties
    BlaschkeProduct product;
};

struct RestartOutcome {
    Candidate best;
    long evaluations = 0;
    std::vector<double> history;
};

/// Moves one coordinate of b: the real or imaginary part of a zero, or the
/// rotation angle. Real-only products only move zeros along the real axis.
BlaschkeProduct perturb(const BlaschkeProduct& b, long coordinate, double step, Rng& rng,
                        bool real_only)
{
    std::vector<Complex> zeros(b.zeros().begin(), b.zeros().end());
    Complex rotation = b.rotation();
    const long zero_coords = real_only ? static_cast<long>(zeros.size())
                                       : 2 * static_cast<long>(zeros.size());
    const double delta = step * rng.normal();
    if (coordinate < zero_coords) {
        const std::size_t k = static_cast<std::size_t>(real_only ? coordinate : coordinate / 2);
        Complex& a = zeros[k];
        if (real_only || coordinate % 2 == 0) {
            a += delta;
        } else {
            a += Complex(0.0, delta);
        }
        if (real_only) {
            a = std::clamp(a.real(), -kZeroRadiusLimit, kZeroRadiusLimit);
        } else if (std::abs(a) > kZeroRadiusLimit) {
            a *= kZeroRadiusLimit / std::abs(a);
        }
    } else {
        rotation = std::polar(1.0, std::arg(rotation) + std::numbers::pi * delta);
    }
    return BlaschkeProduct(std::move(zeros), rotation);
}

long coordinate_count(const BlaschkeProduct& b, bool real_only)
{
    const long zeros = static_cast<long>(b.zeros().size());
    return real_only ? zeros : 2 * zeros + 1;
}

bool ranks_before(const Candidate& a, const Candidate& b)
{
    return a.value > b.value || (a.value == b.value && a.index < b.index);
}

RestartOutcome run_restart(Family family, long iterations, std::uint64_t seed, bool real_only,
                           int max_degree)
{
    RestartOutcome out;
    const long sampling = std::clamp<long>(static_cast<long>(0.7 * iterations), 1, iterations);
    const long refining = iterations - sampling;

    std::vector<Candidate> top;
    for (long i = 0; i < sampling; ++i) {
        const int degree = 1 + static_cast<int>(i % max_degree);
        Candidate c{0.0, i, sample_schwarz(sample_seed(seed, i), degree, real_only)};
        c.value = witness_value(family, c.product);
        ++out.evaluations;
        if (static_cast<int>(top.size()) < kRefineCandidates || ranks_before(c, top.back())) {
            top.insert(std::upper_bound(top.begin(), top.end(), c, ranks_before), std::move(c));
            if (static_cast<int>(top.size()) > kRefineCandidates) {
                top.pop_back();
            }
        }
    }
    out.best = top.front();
    out.history.push_back(out.best.value);

    const long n = static_cast<long>(top.size());
    for (long ci = 0; ci < n && refining > 0; ++ci) {
        const long budget = refining / n + (ci < refining % n ? 1 : 0);
        Candidate current = top[static_cast<std::size_t>(ci)];
        const long coords = coordinate_count(current.product, real_only);
        if (budget == 0 || coords == 0) {
            continue;
        }
        Rng rng(derive_seed(seed, 0x5eed0000ULL + static_cast<std::uint64_t>(ci)));
        const long rounds = std::min<long>(kRefineRounds, budget);
        double step = kInitialStep;
        long coordinate = 0;
        for (long r = 0; r < rounds; ++r) {
            const long trials = budget / rounds + (r < budget % rounds ? 1 : 0);
            bool improved = false;
            for (long t = 0; t < trials; ++t) {
                BlaschkeProduct trial =
                    perturb(current.product, coordinate, step, rng, real_only);
                coordinate = (coordinate + 1) % coords;
                const double v = witness_value(family, trial);
                ++out.evaluations;
                if (v > current.value) {
                    current.value = v;
                    current.product = std::move(trial);
                    improved = true;
                }
            }
            if (!improved) {
                step *= 0.5;
            }
            if (current.value > out.best.value) {
                out.best = current;
            }
            out.history.push_back(out.best.value);
        }
    }
    return out;
}

}  // namespace

double witness_value(Family family, const BlaschkeProduct& w)
{
    return std::abs(gamma3_closed_form(family, schwarz_triple(w)));
}

std::uint64_t sample_seed(std::uint64_t restart_seed, long index)
{
    return derive_seed(restart_seed, static_cast<std::uint64_t>(index));
}

SearchResult search_lower_bound(Family family, const SearchOptions& options)
{
    if (options.iterations < 1) {
        throw std::invalid_argument("search needs at least one iteration");
    }
    if (options.max_degree < 1) {
        throw std::invalid_argument("search needs max_degree >= 1");
    }
    if (options.restarts < 1) {
        throw std::invalid_argument("search needs at least one restart");
    }

    std::vector<std::future<RestartOutcome>> runs;
    for (int r = 0; r < options.restarts; ++r) {
        runs.push_back(std::async(std::launch::async, run_restart, family, options.iterations,
                                  options.seed + static_cast<std::uint64_t>(r),
                                  options.real_only, options.max_degree));
    }

    SearchResult result;
    result.family = family;
    result.real_only = options.real_only;
    bool first = true;
    // Merge in restart order; strict improvement keeps the lowest restart on ties.
    for (auto& run : runs) {
        RestartOutcome outcome = run.get();
        result.iterations += outcome.evaluations;
        if (first || outcome.best.value > result.best_value) {
            result.best_value = outcome.best.value;
            result.witness = std::move(outcome.best.product);
            result.history = std::move(outcome.history);
            first = false;
        }
    }
    result.upper_bound = global_bound(family).gamma3_bound;
    if (options.real_only) {
        result.remark_value = sharp_real_gamma3_bound(family);
    }
    return result;
}

GapRecord gap_report(Family family, const SearchResult& result)
{
    if (result.family != family) {
        throw FamilyMismatch("search result belongs to " +
                             std::string(family_name(result.family)) + ", not " +
                             std::string(family_name(family)));
    }
    GapRecord gap;
    gap.absolute = result.upper_bound - result.best_value;
    gap.relative = result.upper_bound > 0.0 ? gap.absolute / result.upper_bound : 0.0;
    return gap;
}

}  // namespace logcoef
