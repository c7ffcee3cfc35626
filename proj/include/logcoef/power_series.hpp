#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace logcoef {

using Complex = std::complex<double>;

/// Taylor expansion sum_{k=0}^{N} c_k z^k with an explicit order N.
///
/// Binary operations truncate to the smaller operand order; nothing is ever
/// padded past the data that was supplied.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order = 0);
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    /// Polynomial with the given coefficients, zero-padded (or cut) to `order`.
    static TruncatedSeries polynomial(std::initializer_list<Complex> coeffs, int order);
    static TruncatedSeries polynomial(std::span<const Complex> coeffs, int order);
    static TruncatedSeries constant(Complex value, int order);
    /// The series z (order >= 1).
    static TruncatedSeries identity(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    /// Horner evaluation of the truncated polynomial.
    Complex evaluate(Complex z) const noexcept;

    /// Keeps coefficients 0..order; order must not exceed the current one.
    TruncatedSeries truncated(int order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

private:
    std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to min(order a, order b).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; throws ZeroConstantTerm when |a0| <= 1e-12.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// Term-wise derivative. Order drops by one (an order-0 series stays order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Term-wise antiderivative with zero constant term; order rises by one.
TruncatedSeries antiderivative(const TruncatedSeries& a);

/// exp(g), solved from e' = g' e.
TruncatedSeries exp_series(const TruncatedSeries& g);

/// Drops the constant term and shifts down: f/z. Order drops by one.
TruncatedSeries divide_by_z(const TruncatedSeries& f);

/// g = log(f(z)/z) for normalized f (f0 = 0, f1 = 1), with g0 = 0. The
/// result has order N - 1 and its coefficients are twice the logarithmic
/// coefficients. Solved from g' (f/z) = (f/z)'. Throws NotNormalized.
TruncatedSeries log_over_z(const TruncatedSeries& f);

}  // namespace logcoef
