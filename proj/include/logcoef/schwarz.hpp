#pragma once

#include "logcoef/power_series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace logcoef {

/// Leading Taylor coefficients of a Schwarz function w = c1 z + c2 z^2 + c3 z^3 + ...
struct SchwarzTriple {
    Complex c1;
    Complex c2;
    Complex c3;
};

/// Slack in each of Carlson's coefficient inequalities (negative = violated).
struct CarlsonSlacks {
    double first = 0.0;   // 1 - |c1|
    double second = 0.0;  // 1 - |c1|^2 - |c2|
    double third = 0.0;   // 1 - |c1|^2 - |c2|^2/(1+|c1|) - |c3|

    double worst() const noexcept;
    bool feasible() const noexcept;
};

CarlsonSlacks carlson_check(const SchwarzTriple& c) noexcept;

/// w(z) = rotation * z * prod_k (z - a_k)/(1 - conj(a_k) z).
///
/// One zero is pinned at the origin, so degree() = 1 + zeros().size() and
/// w(0) = 0 holds by construction. Construction throws ZeroOutsideDisk if any
/// |a_k| >= 1 and std::invalid_argument if |rotation| != 1.
class BlaschkeProduct {
public:
    /// w(z) = z.
    BlaschkeProduct() = default;
    BlaschkeProduct(std::vector<Complex> free_zeros, Complex rotation);

    int degree() const noexcept { return 1 + static_cast<int>(zeros_.size()); }
    std::span<const Complex> zeros() const noexcept { return zeros_; }
    Complex rotation() const noexcept { return rotation_; }

    Complex operator()(Complex z) const noexcept;

    friend bool operator==(const BlaschkeProduct&, const BlaschkeProduct&) = default;

private:
    std::vector<Complex> zeros_;
    Complex rotation_{1.0, 0.0};
};

/// Taylor coefficients of w up to z^order; coefficient 0 is exactly 0.
TruncatedSeries taylor_of_blaschke(const BlaschkeProduct& b, int order);

/// (c1, c2, c3) read off a series of order >= 3.
SchwarzTriple schwarz_triple(const TruncatedSeries& w);
SchwarzTriple schwarz_triple(const BlaschkeProduct& b);

/// Deterministic random Blaschke product of the given degree. Zeros are
/// area-uniform on the open disk, the rotation uniform on the circle. With
/// real_only the zeros are uniform on (-1, 1) and the rotation is +1 or -1,
/// which makes every Taylor coefficient real.
BlaschkeProduct sample_schwarz(std::uint64_t seed, int degree, bool real_only);

}  // namespace logcoef
