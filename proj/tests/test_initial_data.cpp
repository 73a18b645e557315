#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace gblrei;

TEST_CASE("soliton parameters derive from omega") {
    SolitonParams p;
    p.omega = 0.5;
    CHECK(p.amplitude() == doctest::Approx(3.0 / 8.0));
    CHECK(p.velocity() == doctest::Approx(std::sqrt(3.0) / 2.0));
    p.velocity_sign = -1;
    CHECK(p.velocity() == doctest::Approx(-std::sqrt(3.0) / 2.0));
}

TEST_CASE("soliton_state point values") {
    const TorusGrid grid(80.0, 256);
    SolitonParams p;  // omega = 1/2, zeta0 = 0
    const GBState s = soliton_state(p, 0.0, grid);
    const int j0 = grid.num_points() / 2;  // node at x = 0
    CHECK(grid.node(j0) == doctest::Approx(0.0));
    CHECK(s.z[j0].real() == doctest::Approx(-3.0 / 8.0));
    CHECK(std::abs(s.z_t[j0]) < 1e-14);  // tanh(0) = 0
    for (const auto& v : s.z.samples()) CHECK(v.imag() == 0.0);
}

TEST_CASE("soliton_state rejects omega out of range and poor boundary decay") {
    const TorusGrid small(10.0, 64);  // sech^2(2.5) ~ 2.6e-2 at the boundary
    SolitonParams p;
    CHECK_THROWS_AS(soliton_state(p, 0.0, small), InvalidInputError);
    try {
        soliton_state(p, 0.0, small);
    } catch (const InvalidInputError& e) {
        CHECK(std::string(e.what()).find("boundary") != std::string::npos);
    }
    p.omega = 1.5;
    CHECK_THROWS_AS(soliton_state(p, 0.0, TorusGrid(80.0, 64)), InvalidInputError);
}

TEST_CASE("soliton z_t matches a centered time difference of z") {
    const TorusGrid grid(80.0, 512);
    SolitonParams p;
    p.zeta0 = 3.0;
    const double t = 0.4, delta = 1e-5;
    const GBState lo = soliton_state(p, t, grid);
    const GBState hi = soliton_state(p, t + delta, grid);
    const GBState mid = soliton_state(p, t + 0.5 * delta, grid);
    for (int j = 0; j < grid.num_points(); j += 7) {
        const double fd = ((hi.z[j] - lo.z[j]) / delta).real();
        CHECK(std::abs(fd - mid.z_t[j].real()) < 1e-8);
    }
}

TEST_CASE("soliton satisfies the equation to spectral accuracy") {
    // z_tt + z_xxxx - z_xx - (z^2)_xx = 0; z_tt from an O(delta^2) difference
    // of the exact z_t, spatial derivatives spectrally
    const TorusGrid grid(80.0, 4096);
    SolitonParams p;
    const double t = 0.2, delta = 1e-4;
    const GBState s = soliton_state(p, t, grid);
    const GBState lo = soliton_state(p, t - delta, grid);
    const GBState hi = soliton_state(p, t + delta, grid);

    const Spectrum z = to_spectrum(s.z);
    Spectrum ztt(grid);
    {
        const Spectrum a = to_spectrum(lo.z_t), b = to_spectrum(hi.z_t);
        ztt = (1.0 / (2.0 * delta)) * (b - a);
    }
    Spectrum residual = ztt;
    residual += fourier_multiplier(z, inv_dx_pow(-4));
    residual -= fourier_multiplier(z, inv_dx_pow(-2));
    residual -= fourier_multiplier(pointwise_product(z, z), inv_dx_pow(-2));
    CHECK(sobolev_norm(residual, 0.0) < 1e-6);
}

TEST_CASE("rough_state determinism and normalization") {
    const TorusGrid grid(M_PI, 256);
    const RoughParams p(2.0, 42);
    const GBState a = rough_state(p, grid);
    const GBState b = rough_state(p, grid);
    for (int j = 0; j < grid.num_points(); ++j) {
        CHECK(a.z[j] == b.z[j]);  // bitwise
        CHECK(a.z_t[j] == b.z_t[j]);
    }
    CHECK(sobolev_norm(to_spectrum(a.z), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sobolev_norm(to_spectrum(a.z_t), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& v : a.z.samples()) CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));

    const GBState c = rough_state(RoughParams(2.0, 43), grid);
    CHECK(sobolev_norm(to_spectrum(a.z) - to_spectrum(c.z), 0.0) > 1e-3);

    RoughParams pz(2.0, 42);
    pz.zero_velocity = true;
    const GBState d = rough_state(pz, grid);
    for (const auto& v : d.z_t.samples()) CHECK(v == Complex(0.0));
}

TEST_CASE("rough_state preconditions") {
    CHECK_THROWS_AS(rough_state(RoughParams(0.4, 1), TorusGrid(M_PI, 64)), InvalidInputError);
    CHECK_THROWS_AS(rough_state(RoughParams(2.0, 1), TorusGrid(2.0, 64)), InvalidInputError);
}

TEST_CASE("rough_state spectral decay matches the nominal regularity") {
    const TorusGrid grid(M_PI, 1024);
    const GBState s = rough_state(RoughParams(2.0, 7), grid);
    const Spectrum z = to_spectrum(s.z);

    // log-log fit of |z_k| against k over k in [8, M/4]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int k = 8; k <= grid.num_points() / 4; ++k) {
        const double mag = std::abs(z.at(k));
        if (mag == 0.0) continue;
        const double x = std::log(static_cast<double>(k)), y = std::log(mag);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope <= -2.0 + 0.3);
}

TEST_CASE("rough_state Sobolev membership is sharp at theta") {
    const double theta = 2.0;
    const GBState coarse = rough_state(RoughParams(theta, 11), TorusGrid(M_PI, 512));
    const GBState fine = rough_state(RoughParams(theta, 11), TorusGrid(M_PI, 2048));

    // below theta the norm is stable under refinement
    const double below_c = sobolev_norm(to_spectrum(coarse.z), theta - 0.1);
    const double below_f = sobolev_norm(to_spectrum(fine.z), theta - 0.1);
    CHECK(below_f < 2.0 * below_c);

    // above theta it grows with M
    const double above_c = sobolev_norm(to_spectrum(coarse.z), theta + 0.5);
    const double above_f = sobolev_norm(to_spectrum(fine.z), theta + 0.5);
    CHECK(above_f > 1.5 * above_c);
}

TEST_CASE("homogenize absorbs the rough-data mean shift") {
    const TorusGrid grid(M_PI, 256);
    const GBState g = rough_state(RoughParams(2.5, 3), grid);
    CHECK(std::abs(to_spectrum(g.z).at(0)) > 1e-6);  // the +c max|Z1| shift
    const EvolutionState s = homogenize(g);
    CHECK(s.u.at(0) == Complex(0.0));
    const GBState back = recover_state(s);
    for (int j = 0; j < grid.num_points(); ++j)
        CHECK(std::abs(back.z[j] - g.z[j]) < 1e-10);
}
