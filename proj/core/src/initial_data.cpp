#include "gblrei/initial_data.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gblrei/symbols.hpp"

namespace gblrei {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Portable uniform in [0, 1): top 53 bits of the engine output.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// One draw of the construction: smooth a uniform random vector by
// |dx|^{-theta}, shift by c * max|.| and normalize in L2.
GridField rough_field(const TorusGrid& grid, double theta, std::mt19937_64& rng) {
    const int m = grid.num_points();
    GridField z(grid);
    for (int j = 0; j < m; ++j) z[j] = uniform01(rng);
    const double c = uniform01(rng);

    GridField z1 = from_spectrum(fourier_multiplier(to_spectrum(z), abs_dx_pow(-theta)));
    double max_abs = 0.0;
    for (const auto& v : z1.samples()) max_abs = std::max(max_abs, std::abs(v.real()));

    GridField shifted(grid);
    for (int j = 0; j < m; ++j) shifted[j] = z1[j].real() + c * max_abs;
    const double norm = sobolev_norm(to_spectrum(shifted), 0.0);
    for (int j = 0; j < m; ++j) shifted[j] /= norm;
    return shifted;
}

}  // namespace

GBState soliton_state(const SolitonParams& p, double t, const TorusGrid& grid) {
    if (!(p.omega > 0.0 && p.omega <= 1.0))
        throw InvalidInputError("soliton_state: omega must lie in (0, 1]");
    const double amp = p.amplitude();
    const double v = p.velocity();

    auto z_at = [&](double x) {
        const double th = 0.5 * p.omega * (x - v * t + p.zeta0);
        const double sech = 1.0 / std::cosh(th);
        return -amp * sech * sech;
    };

    const double boundary =
        std::max(std::abs(z_at(-grid.half_length())), std::abs(z_at(grid.half_length())));
    if (boundary > 1e-12) {
        std::ostringstream msg;
        msg << "soliton_state: field magnitude " << boundary
            << " at the domain boundary exceeds 1e-12; enlarge half_length";
        throw InvalidInputError(msg.str());
    }

    GBState s{GridField(grid), GridField(grid), t};
    for (int j = 0; j < grid.num_points(); ++j) {
        const double x = grid.node(j);
        const double th = 0.5 * p.omega * (x - v * t + p.zeta0);
        const double sech = 1.0 / std::cosh(th);
        s.z[j] = -amp * sech * sech;
        s.z_t[j] = -amp * p.omega * v * sech * sech * std::tanh(th);
    }
    return s;
}

GBState rough_state(const RoughParams& p, const TorusGrid& grid) {
    if (!(p.theta > 0.5))
        throw InvalidInputError("rough_state: theta must exceed 1/2");
    if (std::abs(grid.half_length() - M_PI) > 1e-12)
        throw InvalidInputError("rough_state: grid must have half_length pi");

    std::mt19937_64 rng_z(splitmix64(p.seed + 0));
    GBState s{rough_field(grid, p.theta, rng_z), GridField(grid), 0.0};
    if (!p.zero_velocity) {
        std::mt19937_64 rng_zt(splitmix64(p.seed + 1));
        s.z_t = rough_field(grid, p.theta_velocity, rng_zt);
    }
    return s;
}

}  // namespace gblrei
