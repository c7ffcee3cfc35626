#include "logcoef/polynomial.hpp"

#include "logcoef/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace logcoef {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
}

int Polynomial::degree() const noexcept
{
    for (int k = static_cast<int>(coeffs_.size()) - 1; k > 0; --k) {
        if (coeffs_[static_cast<std::size_t>(k)] != 0.0) {
            return k;
        }
    }
    return 0;
}

double Polynomial::coefficient(int k) const noexcept
{
    return (k >= 0 && static_cast<std::size_t>(k) < coeffs_.size())
               ? coeffs_[static_cast<std::size_t>(k)]
               : 0.0;
}

double Polynomial::operator()(double t) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return Polynomial();
    }
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    }
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + (-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(double s, const Polynomial& a)
{
    Polynomial r = a;
    for (auto& c : r.coeffs_) {
        c *= s;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    const int n = std::max(a.degree(), b.degree());
    for (int k = 0; k <= n; ++k) {
        if (a.coefficient(k) != b.coefficient(k)) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string(char variable) const
{
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const double c = coefficient(k);
        if (c == 0.0 && !(k == 0 && degree() == 0)) {
            continue;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", std::abs(c));
        std::string term = buf;
        if (k >= 1 && std::abs(c) == 1.0) {
            term.clear();
        }
        if (k >= 1) {
            term += variable;
        }
        if (k >= 2) {
            term += '^' + std::to_string(k);
        }
        if (out.empty()) {
            out = (c < 0.0 ? "-" : "") + term;
        } else {
            out += (c < 0.0 ? " - " : " + ") + term;
        }
    }
    return out;
}

namespace {

void keep_if_inside(std::vector<double>& roots, double r, double lo, double hi)
{
    if (r >= lo && r <= hi) {
        roots.push_back(r);
    }
}

double bisect(const Polynomial& p, double a, double b)
{
    double fa = p(a);
    while (b - a > Tolerances::bisection) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) {
            break;
        }
        const double fm = p(m);
        if (fm == 0.0) {
            return m;
        }
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi)
{
    std::vector<double> roots;
    const int deg = p.degree();
    if (deg > 3) {
        throw std::invalid_argument("real_roots_in handles degree <= 3 only");
    }
    if (deg == 0) {
        if (p.coefficient(0) == 0.0) {
            throw std::invalid_argument("the zero polynomial has no isolated roots");
        }
        return roots;
    }
    if (deg == 1) {
        keep_if_inside(roots, -p.coefficient(0) / p.coefficient(1), lo, hi);
        return roots;
    }
    if (deg == 2) {
        const double a = p.coefficient(2);
        const double b = p.coefficient(1);
        const double c = p.coefficient(0);
        const double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) {
            return roots;
        }
        // Cancellation-free pair of roots.
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        if (q == 0.0) {
            keep_if_inside(roots, 0.0, lo, hi);
            return roots;
        }
        keep_if_inside(roots, q / a, lo, hi);
        keep_if_inside(roots, c / q, lo, hi);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }

    // Cubic: p is monotone between consecutive critical points, so each
    // piece holds at most one root.
    std::vector<double> knots{lo};
    for (double c : real_roots_in(p.derivative(), lo, hi)) {
        if (c > knots.back()) {
            knots.push_back(c);
        }
    }
    if (hi > knots.back()) {
        knots.push_back(hi);
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i];
        const double b = knots[i + 1];
        const double fa = p(a);
        const double fb = p(b);
        if (fa == 0.0) {
            if (roots.empty() || roots.back() != a) {
                roots.push_back(a);
            }
            continue;
        }
        if (fb == 0.0) {
            continue;  // picked up as the next piece's left end
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect(p, a, b));
        }
    }
    if (knots.size() >= 1 && p(knots.back()) == 0.0 &&
        (roots.empty() || roots.back() != knots.back())) {
        roots.push_back(knots.back());
    }
    return roots;
}

}  // namespace logcoef
