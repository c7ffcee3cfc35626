#include "logcoef/errors.hpp"
#include "logcoef/families.hpp"
#include "logcoef/tolerances.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace logcoef;

namespace {

void check_triple(const CoefficientTriple& t, Complex a2, Complex a3, Complex a4)
{
    CHECK(std::abs(t.a2 - a2) <= 1e-15);
    CHECK(std::abs(t.a3 - a3) <= 1e-15);
    CHECK(std::abs(t.a4 - a4) <= 1e-15);
}

TruncatedSeries koebe(int order)
{
    std::vector<Complex> c(order + 1);
    for (int k = 1; k <= order; ++k) {
        c[k] = static_cast<double>(k);
    }
    return TruncatedSeries(c);
}

SchwarzTriple random_feasible_triple(Rng& rng)
{
    const double m1 = rng.open_unit();
    const double m2 = (1.0 - m1 * m1) * rng.open_unit();
    const double m3 = (1.0 - m1 * m1 - m2 * m2 / (1.0 + m1)) * rng.open_unit();
    auto phase = [&] { return std::polar(1.0, 2.0 * std::numbers::pi * rng.open_unit()); };
    return {m1 * phase(), m2 * phase(), m3 * phase()};
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("family table")
{
    for (Family f : kAllFamilies) {
        const auto& info = family_info(f);
        CHECK(info.tag == f);
        CHECK(info.generator[0] == 1.0);
    }
    CHECK(family_info(Family::F1).scale == 48);
    CHECK(family_info(Family::F2).scale == 12);
    CHECK(family_info(Family::F3).scale == 48);
    CHECK(parse_family("f2") == Family::F2);
    CHECK(parse_family("F3") == Family::F3);
    CHECK_THROWS_AS(parse_family("f4"), std::invalid_argument);
}

TEST_CASE("coefficients_from_schwarz examples")
{
    // Oracle for F1, w = z: (1 + z)/(1 - z)^2 = sum (2k + 1) z^k, so a_{k+1} = (2k + 1)/(k + 1).
    check_triple(coefficients_from_schwarz(Family::F1, {1.0, 0.0, 0.0}), 1.5, 5.0 / 3.0, 1.75);
    check_triple(coefficients_from_schwarz(Family::F2, {0.0, 0.0, 0.0}), 0.0, 1.0 / 3.0, 0.0);
    // Oracle for F3, w = 0: 1/(1 - z + z^2) = 1 + z + 0 z^2 - z^3 + ..., integrated.
    check_triple(coefficients_from_schwarz(Family::F3, {0.0, 0.0, 0.0}), 0.5, 0.0, -0.25);
    // Constant terms match the w = 0 expansion 1/(1 - z).
    check_triple(coefficients_from_schwarz(Family::F1, {0.0, 0.0, 0.0}), 0.5, 1.0 / 3.0, 0.25);
}

TEST_CASE("F1 coefficient map keeps a2 within 1 of 1/2")
{
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = random_feasible_triple(rng);
        CHECK(std::abs(coefficients_from_schwarz(Family::F1, c).a2 - 0.5) <= 1.0 + 1e-15);
    }
}

TEST_CASE("gamma3_from_coefficients examples")
{
    CHECK(std::abs(gamma3_from_coefficients({1.5, 5.0 / 3.0, 1.75}) - 3.0 / 16.0) <= 1e-15);
    CHECK(gamma3_from_coefficients({0.0, 1.0 / 3.0, 0.0}) == Complex(0.0));
    CHECK(std::abs(gamma3_from_coefficients({0.5, 0.0, -0.25}) + 5.0 / 48.0) <= 1e-15);
}

TEST_CASE("gamma3_closed_form examples")
{
    CHECK(std::abs(gamma3_closed_form(Family::F1, {1.0, 0.0, 0.0}) - 0.1875) <= 1e-15);
    CHECK(gamma3_closed_form(Family::F2, {0.0, 0.0, 0.0}) == Complex(0.0));
    CHECK(std::abs(gamma3_closed_form(Family::F3, {0.0, 0.0, 0.0}) + 5.0 / 48.0) <= 1e-15);
    CHECK(std::abs(gamma3_closed_form(Family::F1, {0.0, 0.0, 0.0}) - 1.0 / 16.0) <= 1e-15);
}

TEST_CASE("closed form equals the coefficient route for arbitrary triples")
{
    Rng rng(32);
    for (Family f : kAllFamilies) {
        for (int trial = 0; trial < 2000; ++trial) {
            const SchwarzTriple c{logcoef::testing::random_in_disk(rng, 2.0),
                                  logcoef::testing::random_in_disk(rng, 2.0),
                                  logcoef::testing::random_in_disk(rng, 2.0)};
            const Complex a = gamma3_closed_form(f, c);
            const Complex b = gamma3_from_coefficients(coefficients_from_schwarz(f, c));
            CHECK(std::abs(a - b) <= 1e-12);
        }
    }
}

TEST_CASE("member_series examples")
{
    const int order = 4;
    const auto zero = TruncatedSeries(order);
    auto f = member_series(Family::F1, zero, order);
    CHECK(logcoef::testing::max_coeff_error(f, {0.0, 1.0, 0.5, 1.0 / 3.0, 0.25}) <= 1e-15);

    f = member_series(Family::F1, TruncatedSeries::identity(order), order);
    CHECK(logcoef::testing::max_coeff_error(f, {0.0, 1.0, 1.5, 5.0 / 3.0, 1.75}) <= 1e-15);

    f = member_series(Family::F2, zero, order);
    CHECK(logcoef::testing::max_coeff_error(f, {0.0, 1.0, 0.0, 1.0 / 3.0, 0.0}) <= 1e-15);

    CHECK_THROWS_AS(member_series(Family::F1, TruncatedSeries::constant(0.5, order), order),
                    std::invalid_argument);
    CHECK_THROWS_AS(member_series(Family::F1, TruncatedSeries::identity(2), order),
                    std::invalid_argument);
}

TEST_CASE("member_series reproduces the coefficient maps")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto b = sample_schwarz(seed, 1 + static_cast<int>(seed % 5), false);
            const auto series = member_series(f, taylor_of_blaschke(b, kDefaultOrder), kDefaultOrder);
            const auto t = coefficients_from_schwarz(f, schwarz_triple(b));
            CHECK(std::abs(series[0]) == 0.0);
            CHECK(std::abs(series[1] - 1.0) <= 1e-15);
            CHECK(std::abs(series[2] - t.a2) <= 1e-13);
            CHECK(std::abs(series[3] - t.a3) <= 1e-13);
            CHECK(std::abs(series[4] - t.a4) <= 1e-13);
        }
    }
}

TEST_CASE("membership_residual examples")
{
    const int order = 200;
    // f' for w = 0 is 1/(1 - z); (1 - z) f' = 1 up to truncation.
    const auto fp0 = member_derivative(Family::F1, TruncatedSeries(order), order);
    CHECK(membership_residual(Family::F1, fp0, 0.9, 360) ==
          doctest::Approx(1.0).epsilon(1e-8));

    // f' = 1/(1 - z)^3 is not in F1; oracle: direct evaluation of Re (1 - z)^-2.
    const int long_order = 1000;
    std::vector<Complex> c(long_order + 1);
    for (int k = 0; k <= long_order; ++k) {
        c[k] = 0.5 * (k + 1) * (k + 2);
    }
    const double residual = membership_residual(Family::F1, TruncatedSeries(c), 0.95, 720);
    double direct = 1e300;
    for (int k = 0; k < 720; ++k) {
        const Complex z = std::polar(0.95, 2.0 * std::numbers::pi * k / 720);
        direct = std::min(direct, (1.0 / ((1.0 - z) * (1.0 - z))).real());
    }
    CHECK(direct < 0.0);
    CHECK(residual < 0.0);
    CHECK(residual == doctest::Approx(direct).epsilon(1e-6));

    // f' = 1: the residual is min Re h on |z| = 0.5.
    const auto one = TruncatedSeries::constant(1.0, 0);
    CHECK(membership_residual(Family::F1, one, 0.5, 720) == doctest::Approx(0.5));
    CHECK(membership_residual(Family::F2, one, 0.5, 720) == doctest::Approx(0.75));
    // Re(1 - z + z^2) = 1 - cos(t)/2 + cos(2t)/4, minimal at cos t = 1/2.
    CHECK(membership_residual(Family::F3, one, 0.5, 720) == doctest::Approx(0.625));
}

TEST_CASE("membership_residual is positive for sampled members")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto b = sample_schwarz(seed, 3, false);
            const int order = 400;
            const auto fp = member_derivative(f, taylor_of_blaschke(b, order), order);
            CHECK(membership_residual(f, fp, 0.8, 720) > 0.0);
        }
    }
}

TEST_CASE("membership_residual rejects bad radii")
{
    const auto one = TruncatedSeries::constant(1.0, 0);
    CHECK_THROWS_AS(membership_residual(Family::F1, one, 0.0, 720), BadRadius);
    CHECK_THROWS_AS(membership_residual(Family::F1, one, 1.0, 720), BadRadius);
    CHECK_THROWS_AS(membership_residual(Family::F1, one, -0.3, 720), BadRadius);
    CHECK_THROWS_AS(membership_residual(Family::F1, one, 0.5, 4), std::invalid_argument);
}

TEST_CASE("gamma_sequence examples")
{
    const auto g = gamma_sequence(koebe(8), 7);
    REQUIRE(g.size() == 7);
    for (int n = 1; n <= 7; ++n) {
        CHECK(std::abs(g[n - 1] - 1.0 / n) <= 1e-13);
    }
    for (const Complex& v : gamma_sequence(TruncatedSeries::identity(8), 7)) {
        CHECK(v == Complex(0.0));
    }
    const auto f1 = member_series(Family::F1, TruncatedSeries(kDefaultOrder), kDefaultOrder);
    const Complex g3 = gamma_sequence(f1, 3)[2];
    CHECK(std::abs(g3 - 1.0 / 16.0) <= 1e-15);
    CHECK(std::abs(g3 - gamma3_closed_form(Family::F1, {0.0, 0.0, 0.0})) <= 1e-15);

    CHECK_THROWS_AS(gamma_sequence(koebe(4), 4), std::invalid_argument);
    CHECK_THROWS_AS(gamma_sequence(TruncatedSeries::polynomial({0.0, 3.0}, 4), 2), NotNormalized);
}

TEST_CASE("milin_functional examples")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(milin_functional(koebe(8), n)) <= 1e-12);
    }
    CHECK(std::abs(milin_functional(TruncatedSeries::identity(8), 3) + 13.0 / 3.0) <= 1e-12);
    CHECK_THROWS_AS(milin_functional(TruncatedSeries::polynomial({0.0, 0.5}, 8), 3),
                    NotNormalized);
}

TEST_CASE("Milin inequality for sampled members")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            const auto b = sample_schwarz(derive_seed(33, seed), 1 + static_cast<int>(seed % 6), false);
            const auto series = member_series(f, taylor_of_blaschke(b, kDefaultOrder), kDefaultOrder);
            CHECK(milin_functional(series, 3) <= 1e-9);
        }
    }
}

TEST_CASE("closed form agrees with the series-log oracle")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t i = 0; i < 2000; ++i) {
            const auto b = sample_schwarz(derive_seed(34, i), 1 + static_cast<int>(i % 6), false);
            const auto series = member_series(f, taylor_of_blaschke(b, kDefaultOrder), kDefaultOrder);
            const Complex oracle = gamma_sequence(series, 3)[2];
            const Complex closed = gamma3_closed_form(f, schwarz_triple(b));
            CHECK(std::abs(oracle - closed) <= 1e-9);
            CHECK(std::abs(closed) <= general_gamma3_bound(f) + 1e-9);
        }
    }
}

TEST_CASE("real a2 stays below the sharp real bound")
{
    for (Family f : kAllFamilies) {
        for (std::uint64_t i = 0; i < 2000; ++i) {
            const auto b = sample_schwarz(derive_seed(35, i), 1 + static_cast<int>(i % 6), true);
            const auto c = schwarz_triple(b);
            const auto t = coefficients_from_schwarz(f, c);
            const Complex g = gamma3_closed_form(f, c);
            CHECK(t.a2.imag() == 0.0);
            CHECK(g.imag() == 0.0);
            CHECK(std::abs(g) <= sharp_real_gamma3_bound(f) + 1e-6);
        }
    }
}

TEST_CASE("bound constants")
{
    CHECK(general_gamma3_bound(Family::F1) == 0.328125);
    CHECK(general_gamma3_bound(Family::F2) == doctest::Approx(0.258765).epsilon(1e-6));
    CHECK(general_gamma3_bound(Family::F3) == doctest::Approx(0.36979).epsilon(1e-5));
    CHECK(sharp_real_gamma3_bound(Family::F1) == doctest::Approx(0.323466).epsilon(1e-6));
    CHECK(sharp_real_gamma3_bound(Family::F2) == doctest::Approx(0.258223).epsilon(1e-6));
    CHECK(sharp_real_gamma3_bound(Family::F3) == doctest::Approx(0.368238).epsilon(1e-6));
    for (Family f : kAllFamilies) {
        CHECK(sharp_real_gamma3_bound(f) < general_gamma3_bound(f));
    }
}

}  // TEST_SUITE
