#pragma once

#include "logcoef/power_series.hpp"
#include "logcoef/schwarz.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace logcoef {

/// The three close-to-convex subclasses Re{h(z) f'(z)} > 0 with
/// h = 1 - z, 1 - z^2 and 1 - z + z^2.
enum class Family { F1, F2, F3 };

inline constexpr std::array<Family, 3> kAllFamilies{Family::F1, Family::F2, Family::F3};

struct FamilyInfo {
    Family tag;
    std::string_view name;
    /// h(z) = generator[0] + generator[1] z + generator[2] z^2.
    std::array<double, 3> generator;
    /// Denominator of the gamma_3 closed form (48, 12, 48).
    int scale;
};

const FamilyInfo& family_info(Family family) noexcept;
std::string_view family_name(Family family) noexcept;

/// Accepts "f1", "F1", "1" and so on; throws std::invalid_argument otherwise.
Family parse_family(std::string_view text);

/// Taylor coefficients a2, a3, a4 of a member f.
struct CoefficientTriple {
    Complex a2;
    Complex a3;
    Complex a4;
};

/// a2, a3, a4 of the member whose Schwarz function has leading coefficients c.
CoefficientTriple coefficients_from_schwarz(Family family, const SchwarzTriple& c) noexcept;

/// gamma_3 = (a4 - a2 a3 + a2^3 / 3) / 2.
Complex gamma3_from_coefficients(const CoefficientTriple& t) noexcept;

/// gamma_3 written directly in (c1, c2, c3).
Complex gamma3_closed_form(Family family, const SchwarzTriple& c) noexcept;

/// h(z) as a series of the given order.
TruncatedSeries generator_series(Family family, int order);

/// f' = (1 + w) / ((1 - w) h), truncated to `order`. Requires w0 = 0 and
/// order(w) >= order.
TruncatedSeries member_derivative(Family family, const TruncatedSeries& w, int order);

/// f = antiderivative of member_derivative(family, w, order - 1); f0 = 0, f1 = 1.
TruncatedSeries member_series(Family family, const TruncatedSeries& w, int order);

/// min over z = radius * exp(2 pi i k / samples) of Re{h(z) f'(z)}, with f'
/// evaluated as its truncated polynomial. Positive values are sampled
/// evidence of membership on that circle, not a proof.
/// Throws BadRadius unless 0 < radius < 1; samples must be >= 8.
double membership_residual(Family family, const TruncatedSeries& f_prime,
                           double radius = 0.95, int samples = 720);

/// gamma_1..gamma_m from log(f/z) = 2 sum gamma_n z^n; requires m <= order(f) - 1.
std::vector<Complex> gamma_sequence(const TruncatedSeries& f, int m);

/// sum_{m=1}^{n} sum_{k=1}^{m} (k |gamma_k|^2 - 1/k); <= 0 for univalent f.
double milin_functional(const TruncatedSeries& f, int n);

/// Upper bound on |gamma_3| over the whole family (complex a2).
double general_gamma3_bound(Family family) noexcept;

/// Sharp |gamma_3| bound for members with real a2 (Cho, Kowalczyk, Kwon,
/// Lecko, Sim): (11 + 15 sqrt 30)/288, (95 + 23 sqrt 46)/972,
/// (743 + 131 sqrt 262)/7776.
double sharp_real_gamma3_bound(Family family) noexcept;

}  // namespace logcoef
