#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace logcoef {

/// SplitMix64 finalizer; used to turn (seed, index) pairs into
/// well-separated generator seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(master) ^ (index + 0x632be59bd9b4e019ULL));
}

/// Platform-stable variates on top of std::mt19937_64. The standard
/// distributions are implementation-defined, so reals are built from the
/// raw 64-bit output directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Uniform on the open interval (0, 1).
    double open_unit()
    {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * open_unit(); }

    /// Standard normal via Box-Muller (one value per call).
    double normal()
    {
        const double u = open_unit();
        const double v = open_unit();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace logcoef
