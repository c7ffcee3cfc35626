#include "logcoef/power_series.hpp"

#include "logcoef/errors.hpp"
#include "logcoef/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace logcoef {

namespace {

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative, got " +
                                    std::to_string(order));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order)
{
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::polynomial(std::span<const Complex> coeffs, int order)
{
    TruncatedSeries s(order);
    const std::size_t n = std::min(coeffs.size(), s.coeffs_.size());
    std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<Complex> coeffs, int order)
{
    return polynomial(std::span<const Complex>(coeffs.begin(), coeffs.size()), order);
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order)
{
    if (order < 1) {
        throw std::invalid_argument("the series z needs order >= 1");
    }
    TruncatedSeries s(order);
    s.coeffs_[1] = 1.0;
    return s;
}

Complex TruncatedSeries::evaluate(Complex z) const noexcept
{
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    require_order(order);
    if (order > this->order()) {
        throw std::invalid_argument("cannot raise series order from " +
                                    std::to_string(this->order()) + " to " +
                                    std::to_string(order));
    }
    return TruncatedSeries(
        std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return multiply(a, b);
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a)
{
    TruncatedSeries r = a;
    for (auto& c : r.coeffs_) {
        c *= s;
    }
    return r;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc{};
        for (int i = 0; i <= k; ++i) {
            acc += a[i] * b[k - i];
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries reciprocal(const TruncatedSeries& a)
{
    const Complex a0 = a[0];
    if (std::abs(a0) <= Tolerances::zero_constant) {
        throw ZeroConstantTerm("reciprocal of a series with vanishing constant term");
    }
    const int n = a.order();
    std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
    r[0] = 1.0 / a0;
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int i = 1; i <= k; ++i) {
            acc += a[i] * r[static_cast<std::size_t>(k - i)];
        }
        r[static_cast<std::size_t>(k)] = -acc / a0;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries derivative(const TruncatedSeries& a)
{
    const int n = a.order();
    if (n == 0) {
        return TruncatedSeries(0);
    }
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * a[k];
    }
    return TruncatedSeries(std::move(d));
}

TruncatedSeries antiderivative(const TruncatedSeries& a)
{
    const int n = a.order();
    std::vector<Complex> out(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n; ++k) {
        out[static_cast<std::size_t>(k + 1)] = a[k] / static_cast<double>(k + 1);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const TruncatedSeries& g)
{
    const int n = g.order();
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
    e[0] = std::exp(g[0]);
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * g[j] * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries divide_by_z(const TruncatedSeries& f)
{
    if (f.order() < 1) {
        throw std::invalid_argument("f/z needs a series of order >= 1");
    }
    return TruncatedSeries(std::vector<Complex>(f.coeffs().begin() + 1, f.coeffs().end()));
}

TruncatedSeries log_over_z(const TruncatedSeries& f)
{
    if (f.order() < 1 || std::abs(f[0]) > Tolerances::normalization ||
        std::abs(f[1] - 1.0) > Tolerances::normalization) {
        throw NotNormalized("log(f/z) needs f(0) = 0 and f'(0) = 1");
    }
    const TruncatedSeries p = divide_by_z(f);
    const int n = p.order();
    const Complex p0 = p[0];
    // g' p = p'  =>  k g_k p_0 = k p_k - sum_{j=1}^{k-1} j g_j p_{k-j}
    std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Complex acc = static_cast<double>(k) * p[k];
        for (int j = 1; j < k; ++j) {
            acc -= static_cast<double>(j) * g[static_cast<std::size_t>(j)] * p[k - j];
        }
        g[static_cast<std::size_t>(k)] = acc / (static_cast<double>(k) * p0);
    }
    return TruncatedSeries(std::move(g));
}

}  // namespace logcoef
