#include "logcoef/schwarz.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/random.hpp"
#include "logcoef/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace logcoef {

double CarlsonSlacks::worst() const noexcept
{
    return std::min({first, second, third});
}

bool CarlsonSlacks::feasible() const noexcept
{
    return worst() >= -Tolerances::carlson_slack;
}

CarlsonSlacks carlson_check(const SchwarzTriple& c) noexcept
{
    const double m1 = std::abs(c.c1);
    const double m2 = std::abs(c.c2);
    const double m3 = std::abs(c.c3);
    return {
        1.0 - m1,
        (1.0 - m1 * m1) - m2,
        (1.0 - m1 * m1 - m2 * m2 / (1.0 + m1)) - m3,
    };
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> free_zeros, Complex rotation)
    : zeros_(std::move(free_zeros)), rotation_(rotation)
{
    for (const Complex& a : zeros_) {
        if (!(std::abs(a) < 1.0)) {
            throw ZeroOutsideDisk("Blaschke zero with modulus " + std::to_string(std::abs(a)) +
                                  " is not inside the unit disk");
        }
    }
    if (std::abs(std::abs(rotation_) - 1.0) > Tolerances::unit_modulus) {
        throw std::invalid_argument("Blaschke rotation must be unimodular");
    }
}

Complex BlaschkeProduct::operator()(Complex z) const noexcept
{
    Complex w = rotation_ * z;
    for (const Complex& a : zeros_) {
        w *= (z - a) / (1.0 - std::conj(a) * z);
    }
    return w;
}

TruncatedSeries taylor_of_blaschke(const BlaschkeProduct& b, int order)
{
    if (order < 1) {
        throw std::invalid_argument("taylor_of_blaschke needs order >= 1");
    }
    TruncatedSeries w = b.rotation() * TruncatedSeries::identity(order);
    for (const Complex& a : b.zeros()) {
        // (z - a) * sum_k conj(a)^k z^k
        std::vector<Complex> geometric(static_cast<std::size_t>(order) + 1);
        Complex power{1.0, 0.0};
        for (auto& g : geometric) {
            g = power;
            power *= std::conj(a);
        }
        const TruncatedSeries factor =
            TruncatedSeries::polynomial({-a, 1.0}, order) * TruncatedSeries(std::move(geometric));
        w = w * factor;
    }
    return w;
}

SchwarzTriple schwarz_triple(const TruncatedSeries& w)
{
    if (w.order() < 3) {
        throw std::invalid_argument("a Schwarz triple needs a series of order >= 3");
    }
    return {w[1], w[2], w[3]};
}

SchwarzTriple schwarz_triple(const BlaschkeProduct& b)
{
    return schwarz_triple(taylor_of_blaschke(b, 3));
}

BlaschkeProduct sample_schwarz(std::uint64_t seed, int degree, bool real_only)
{
    if (degree < 1) {
        throw std::invalid_argument("Blaschke degree must be >= 1");
    }
    Rng rng(seed);
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree - 1));
    for (int k = 1; k < degree; ++k) {
        if (real_only) {
            zeros.emplace_back(rng.uniform(-1.0, 1.0), 0.0);
        } else {
            const double r = std::min(std::sqrt(rng.open_unit()), std::nextafter(1.0, 0.0));
            const double theta = 2.0 * std::numbers::pi * rng.open_unit();
            zeros.push_back(std::polar(r, theta));
        }
    }
    Complex rotation{1.0, 0.0};
    if (real_only) {
        rotation = rng.coin() ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    } else {
        rotation = std::polar(1.0, 2.0 * std::numbers::pi * rng.open_unit());
    }
    return BlaschkeProduct(std::move(zeros), rotation);
}

}  // namespace logcoef
