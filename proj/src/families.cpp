#include "logcoef/families.hpp"

#include "logcoef/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace logcoef {

namespace {

constexpr std::array<FamilyInfo, 3> kFamilies{{
    {Family::F1, "F1", {1.0, -1.0, 0.0}, 48},
    {Family::F2, "F2", {1.0, 0.0, -1.0}, 12},
    {Family::F3, "F3", {1.0, -1.0, 1.0}, 48},
}};

}  // namespace

const FamilyInfo& family_info(Family family) noexcept
{
    return kFamilies[static_cast<std::size_t>(family)];
}

std::string_view family_name(Family family) noexcept
{
    return family_info(family).name;
}

Family parse_family(std::string_view text)
{
    std::string key;
    for (char ch : text) {
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (key == "f1" || key == "1") {
        return Family::F1;
    }
    if (key == "f2" || key == "2") {
        return Family::F2;
    }
    if (key == "f3" || key == "3") {
        return Family::F3;
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected f1, f2 or f3)");
}

CoefficientTriple coefficients_from_schwarz(Family family, const SchwarzTriple& c) noexcept
{
    const Complex c1 = c.c1;
    const Complex c2 = c.c2;
    const Complex c3 = c.c3;
    const Complex c1sq = c1 * c1;
    const Complex c1cu = c1sq * c1;
    switch (family) {
    case Family::F1:
        return {
            (1.0 + 2.0 * c1) / 2.0,
            (1.0 + 2.0 * c1 + 2.0 * c1sq + 2.0 * c2) / 3.0,
            (1.0 + 2.0 * c1 + 2.0 * c2 + 2.0 * c3 + 2.0 * c1sq + 4.0 * c1 * c2 + 2.0 * c1cu) / 4.0,
        };
    case Family::F2:
        return {
            c1,
            (1.0 + 2.0 * c2 + 2.0 * c1sq) / 3.0,
            (c1 + c3 + 2.0 * c1 * c2 + c1cu) / 2.0,
        };
    case Family::F3:
        return {
            (1.0 + 2.0 * c1) / 2.0,
            2.0 * (c1 + c2 + c1sq) / 3.0,
            (2.0 * c2 + 2.0 * c3 + 2.0 * c1sq + 2.0 * c1cu + 4.0 * c1 * c2 - 1.0) / 4.0,
        };
    }
    return {};
}

Complex gamma3_from_coefficients(const CoefficientTriple& t) noexcept
{
    return 0.5 * (t.a4 - t.a2 * t.a3 + t.a2 * t.a2 * t.a2 / 3.0);
}

Complex gamma3_closed_form(Family family, const SchwarzTriple& c) noexcept
{
    const Complex c1 = c.c1;
    const Complex c2 = c.c2;
    const Complex c3 = c.c3;
    const Complex c1cu = c1 * c1 * c1;
    switch (family) {
    case Family::F1:
        return (3.0 + 2.0 * c1 + 4.0 * c2 + 12.0 * c3 + 8.0 * c1 * c2 + 4.0 * c1cu) / 48.0;
    case Family::F2:
        return (c1 + 3.0 * c3 + 2.0 * c1 * c2 + c1cu) / 12.0;
    case Family::F3:
        return (-5.0 - 2.0 * c1 + 4.0 * c2 + 12.0 * c3 + 8.0 * c1 * c2 + 4.0 * c1cu) / 48.0;
    }
    return {};
}

TruncatedSeries generator_series(Family family, int order)
{
    const auto& g = family_info(family).generator;
    return TruncatedSeries::polynomial({g[0], g[1], g[2]}, order);
}

TruncatedSeries member_derivative(Family family, const TruncatedSeries& w, int order)
{
    if (std::abs(w[0]) != 0.0) {
        throw std::invalid_argument("a Schwarz function must vanish at the origin");
    }
    const TruncatedSeries wt = w.truncated(order);
    const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    return (one + wt) * reciprocal(one - wt) * reciprocal(generator_series(family, order));
}

TruncatedSeries member_series(Family family, const TruncatedSeries& w, int order)
{
    if (order < 1) {
        throw std::invalid_argument("member_series needs order >= 1");
    }
    return antiderivative(member_derivative(family, w, order - 1));
}

double membership_residual(Family family, const TruncatedSeries& f_prime, double radius,
                           int samples)
{
    if (!(radius > 0.0 && radius < 1.0)) {
        throw BadRadius("membership radius must lie in (0, 1), got " + std::to_string(radius));
    }
    if (samples < 8) {
        throw std::invalid_argument("membership_residual needs at least 8 samples");
    }
    const auto& g = family_info(family).generator;
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const Complex z = std::polar(radius, 2.0 * std::numbers::pi * k / samples);
        const Complex h = g[0] + z * (g[1] + z * g[2]);
        worst = std::min(worst, (h * f_prime.evaluate(z)).real());
    }
    return worst;
}

std::vector<Complex> gamma_sequence(const TruncatedSeries& f, int m)
{
    if (m < 0 || m > f.order() - 1) {
        throw std::invalid_argument("gamma_sequence needs 0 <= m <= order(f) - 1");
    }
    const TruncatedSeries g = log_over_z(f);
    std::vector<Complex> gammas;
    gammas.reserve(static_cast<std::size_t>(m));
    for (int n = 1; n <= m; ++n) {
        gammas.push_back(0.5 * g[n]);
    }
    return gammas;
}

double milin_functional(const TruncatedSeries& f, int n)
{
    const std::vector<Complex> gammas = gamma_sequence(f, n);
    double total = 0.0;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k) {
            total += k * std::norm(gammas[static_cast<std::size_t>(k - 1)]) - 1.0 / k;
        }
    }
    return total;
}

double general_gamma3_bound(Family family) noexcept
{
    switch (family) {
    case Family::F1:
        return 15.75 / 48.0;
    case Family::F2: {
        // f2 at its interior critical point ((4 - sqrt 7)/6, (47 - 14 sqrt 7)/108).
        const double s7 = std::sqrt(7.0);
        const double x = (4.0 - s7) / 6.0;
        const double y = (47.0 - 14.0 * s7) / 108.0;
        const double value =
            x + 3.0 * (1.0 - x * x - y * y / (1.0 + x)) + 2.0 * x * y + x * x * x;
        return value / 12.0;
    }
    case Family::F3:
        return 17.75 / 48.0;
    }
    return 0.0;
}

double sharp_real_gamma3_bound(Family family) noexcept
{
    switch (family) {
    case Family::F1:
        return (11.0 + 15.0 * std::sqrt(30.0)) / 288.0;
    case Family::F2:
        return (95.0 + 23.0 * std::sqrt(46.0)) / 972.0;
    case Family::F3:
        return (743.0 + 131.0 * std::sqrt(262.0)) / 7776.0;
    }
    return 0.0;
}

}  // namespace logcoef
