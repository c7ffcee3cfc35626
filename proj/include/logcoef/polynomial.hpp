#pragma once

#include <span>
#include <string>
#include <vector>

namespace logcoef {

/// Dense real polynomial, coefficient k multiplies t^k.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    /// Highest index with a non-zero coefficient (0 for constants).
    int degree() const noexcept;
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double coefficient(int k) const noexcept;

    double operator()(double t) const noexcept;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// "9 + 22t - 4t^2 - 16t^3" style rendering in the given variable.
    std::string to_string(char variable = 't') const;

private:
    std::vector<double> coeffs_;
};

/// Real roots of p in [lo, hi], ascending, for degree <= 3.
///
/// Linear and quadratic cases are closed form; the cubic case brackets
/// sign changes between the critical points of p and bisects each bracket
/// down to Tolerances::bisection. Throws std::invalid_argument for degree > 3
/// or for the zero polynomial.
std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi);

}  // namespace logcoef
