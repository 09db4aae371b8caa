#include "lcabp/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lcabp {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(RngSpec spec) : state_(mix(mix(spec.seed) + spec.stream)) {}

std::uint64_t Rng::next_u64() {
    state_ += kGamma;
    return mix(state_);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: bound must be nonzero");
    // Rejection below the largest multiple of bound keeps the draw unbiased.
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= threshold) return x % bound;
    }
}

double Rng::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

bool Rng::next_bool() { return (next_u64() & 1) != 0; }

}  // namespace lcabp
