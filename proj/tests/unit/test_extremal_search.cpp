#include "logcoef/errors.hpp"
#include "logcoef/extremal_search.hpp"

#include <doctest.h>

#include <cmath>

using namespace logcoef;

namespace {

/// First master seed whose opening degree-1 real sample is w(z) = z.
std::uint64_t seed_for_identity()
{
    for (std::uint64_t s = 1;; ++s) {
        if (sample_schwarz(sample_seed(s, 0), 1, true).rotation() == Complex(1.0)) {
            return s;
        }
    }
}

SearchOptions options(long iterations, std::uint64_t seed, bool real_only, int max_degree = 4)
{
    SearchOptions o;
    o.iterations = iterations;
    o.seed = seed;
    o.real_only = real_only;
    o.max_degree = max_degree;
    return o;
}

}  // namespace

TEST_SUITE("extremal_search") {

TEST_CASE("a single evaluation of w(z) = z")
{
    const auto r = search_lower_bound(Family::F1, options(1, seed_for_identity(), true, 1));
    CHECK(r.iterations == 1);
    CHECK(r.witness == BlaschkeProduct());
    CHECK(r.best_value == doctest::Approx(0.1875).epsilon(1e-15));
}

TEST_CASE("search is deterministic and sound")
{
    for (Family f : kAllFamilies) {
        for (bool real_only : {false, true}) {
            const auto a = search_lower_bound(f, options(3000, 5, real_only));
            const auto b = search_lower_bound(f, options(3000, 5, real_only));
            CHECK(a.best_value == b.best_value);
            CHECK(a.witness == b.witness);
            CHECK(a.history == b.history);
            CHECK(a.iterations == 3000);
            // The stored witness reproduces the reported value.
            CHECK(std::abs(witness_value(f, a.witness) - a.best_value) <= 1e-12);
            CHECK(a.real_only == real_only);
            CHECK(a.remark_value.has_value() == real_only);
        }
    }
}

TEST_CASE("best value never decreases across rounds")
{
    const auto r = search_lower_bound(Family::F3, options(5000, 9, false));
    REQUIRE(r.history.size() > 1);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
        CHECK(r.history[i] >= r.history[i - 1]);
    }
    CHECK(r.history.back() == r.best_value);
}

TEST_CASE("search never beats the proven bounds")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto general = search_lower_bound(f, options(4000, seed, false));
            CHECK(general.best_value <= general.upper_bound + 1e-9);
            CHECK(general.upper_bound == doctest::Approx(general_gamma3_bound(f)).epsilon(1e-12));
            const auto real = search_lower_bound(f, options(4000, seed, true));
            CHECK(real.best_value <= *real.remark_value + 1e-6);
            CHECK(real.witness.rotation().imag() == 0.0);
        }
    }
}

TEST_CASE("restarts are merged deterministically")
{
    SearchOptions o = options(2000, 3, false);
    o.restarts = 3;
    const auto a = search_lower_bound(Family::F1, o);
    const auto b = search_lower_bound(Family::F1, o);
    CHECK(a.best_value == b.best_value);
    CHECK(a.witness == b.witness);
    CHECK(a.iterations == 6000);
    o.restarts = 1;
    CHECK(a.best_value >= search_lower_bound(Family::F1, o).best_value);
}

TEST_CASE("invalid search options")
{
    CHECK_THROWS_AS(search_lower_bound(Family::F1, options(0, 1, false)), std::invalid_argument);
    CHECK_THROWS_AS(search_lower_bound(Family::F1, options(10, 1, false, 0)),
                    std::invalid_argument);
}

TEST_CASE("gap_report")
{
    SearchResult r;
    r.family = Family::F1;
    r.best_value = 0.3234;
    r.upper_bound = 0.328125;
    auto gap = gap_report(Family::F1, r);
    CHECK(gap.absolute == doctest::Approx(0.004725));
    CHECK(gap.relative == doctest::Approx(0.004725 / 0.328125));

    r.best_value = r.upper_bound;
    CHECK(gap_report(Family::F1, r).absolute == 0.0);

    r.family = Family::F3;
    r.best_value = 0.3682;
    r.upper_bound = 17.75 / 48.0;
    CHECK(gap_report(Family::F3, r).absolute == doctest::Approx(0.0015917).epsilon(1e-4));

    CHECK_THROWS_AS(gap_report(Family::F2, r), FamilyMismatch);
}

}  // TEST_SUITE
