#ifndef GBLREI_INITIAL_DATA_HPP
#define GBLREI_INITIAL_DATA_HPP

#include <cmath>
#include <cstdint>

#include "gblrei/gb_core.hpp"

namespace gblrei {

// Traveling sech^2 wave. Amplitude and speed always derive from omega.
struct SolitonParams {
    double omega = 0.5;       // frequency, 0 < omega <= 1
    double zeta0 = 0.0;       // shift
    int velocity_sign = +1;   // +1 or -1

    double amplitude() const { return 1.5 * omega * omega; }
    double velocity() const {
        return velocity_sign * std::sqrt(1.0 - omega * omega);
    }
};

// Seeded rough data of nominal Sobolev regularity theta. z_t is built by the
// same recipe from an independent substream of the seed with exponent
// theta_velocity (default theta - 2); zero_velocity switches z_t off.
struct RoughParams {
    double theta = 2.0;
    std::uint64_t seed = 0;
    double theta_velocity;  // defaults to theta - 2
    bool zero_velocity = false;

    RoughParams(double theta_, std::uint64_t seed_)
        : theta(theta_), seed(seed_), theta_velocity(theta_ - 2.0) {}
    RoughParams(double theta_, std::uint64_t seed_, double theta_velocity_)
        : theta(theta_), seed(seed_), theta_velocity(theta_velocity_) {}
};

// Exact soliton state at time t. Throws if the field has not decayed below
// 1e-12 at the domain boundary.
GBState soliton_state(const SolitonParams& p, double t, const TorusGrid& grid);

// Uniform random spectrum smoothed by |dx|^{-theta} (zero mode dropped),
// shifted and L2-normalized. Deterministic for a given seed: stream i uses
// mt19937_64 seeded with splitmix64(seed + i), doubles drawn as
// (x >> 11) * 2^-53.
GBState rough_state(const RoughParams& p, const TorusGrid& grid);

}  // namespace gblrei

#endif
