#include "gblrei/oracle.hpp"

#include <cmath>

namespace gblrei {
namespace oracle {

namespace {

const Complex kI(0.0, 1.0);

void require_zero_mean(const Spectrum& f, const char* who) {
    const double scale = std::max(1.0, sobolev_norm(f, 0.0));
    if (std::abs(f.at(0)) > 1e-12 * scale)
        throw PreconditionError(std::string(who) + ": nonzero mean mode");
}

// Output mode kept iff representable and not the unpaired Nyquist mode.
bool keep_mode(const TorusGrid& g, int k) {
    return k > g.min_mode() && k <= g.max_mode();
}

}  // namespace

PhaseFunction phase_i0() {
    return {"phi_I0", [](double k, double k1, double k2) { return k * k + k1 * k1 + k2 * k2; }};
}
PhaseFunction phase_i1() {
    return {"phi_I1", [](double k, double k1, double k2) { return k * k - k1 * k1 - k2 * k2; }};
}
PhaseFunction phase_i2() {
    return {"phi_I2", [](double k, double k1, double k2) { return k * k + k2 * k2 - k1 * k1; }};
}
PhaseFunction phase_t1_shift() {
    return {"phi_T1", [](double k, double k1, double k2) { return 2.0 * k2 * k2 + 2.0 * k * k1; }};
}
PhaseFunction phase_t2_shift() {
    return {"phi_T2", [](double k, double k1, double k2) { return 2.0 * k1 * k1 + 2.0 * k * k2; }};
}
PhaseFunction phase_t3_shift() {
    return {"phi_T3", [](double k, double k1, double k2) { return 2.0 * k * k - 2.0 * k1 * k2; }};
}

Complex phase_integral(double phi, double tau) {
    if (tau == 0.0) return 0.0;
    if (std::abs(phi) < 1e-14 * std::max(1.0, 1.0 / tau)) return Complex(tau, 0.0);
    return (1.0 - std::exp(Complex(0.0, -tau * phi))) / (kI * phi);
}

Spectrum oracle_I(int which, const Spectrum& f, double tau) {
    const TorusGrid& g = f.grid();
    Spectrum out(g);
    const Spectrum fb = conjugate(f);
    const Spectrum& c1 = (which == 0) ? fb : f;
    const Spectrum& c2 = (which == 1) ? f : fb;
    PhaseFunction pf;
    switch (which) {
        case 0: pf = phase_i0(); break;
        case 1: pf = phase_i1(); break;
        case 2: pf = phase_i2(); break;
        default: throw InvalidInputError("oracle_I: which must be 0, 1 or 2");
    }
    for (int k1 = g.min_mode(); k1 <= g.max_mode(); ++k1) {
        if (c1.at(k1) == Complex(0.0)) continue;
        for (int k2 = g.min_mode(); k2 <= g.max_mode(); ++k2) {
            const int k = k1 + k2;
            if (!keep_mode(g, k)) continue;
            const double phi =
                pf.phi(g.wavenumber(k), g.wavenumber(k1), g.wavenumber(k2));
            out.at(k) += phase_integral(phi, tau) * c1.at(k1) * c2.at(k2);
        }
    }
    return out;
}

Spectrum oracle_T(int which, const Spectrum& f, double tau) {
    const TorusGrid& g = f.grid();
    if (which < 0 || which > 3)
        throw InvalidInputError("oracle_T: which must be in 0..3");
    if (which != 0) require_zero_mean(f, "oracle_T");
    Spectrum out(g);
    const Spectrum fb = conjugate(f);

    if (which == 0) {
        // the constant mode of I0
        const PhaseFunction pf = phase_i0();
        for (int k1 = g.min_mode(); k1 <= g.max_mode(); ++k1) {
            const int k2 = -k1;
            if (!g.contains_mode(k2)) continue;
            const double phi = pf.phi(0.0, g.wavenumber(k1), g.wavenumber(k2));
            out.at(0) += phase_integral(phi, tau) * fb.at(k1) * fb.at(k2);
        }
        return out;
    }

    const PhaseFunction pf = (which == 1)   ? phase_t1_shift()
                             : (which == 2) ? phase_t2_shift()
                                            : phase_t3_shift();
    for (int k1 = g.min_mode(); k1 <= g.max_mode(); ++k1) {
        if (fb.at(k1) == Complex(0.0)) continue;
        for (int k2 = g.min_mode(); k2 <= g.max_mode(); ++k2) {
            const int k = k1 + k2;
            if (k == 0 || !keep_mode(g, k)) continue;
            const double kk = g.wavenumber(k);
            const double kk1 = g.wavenumber(k1);
            const double kk2 = g.wavenumber(k2);
            double w;
            switch (which) {
                case 1: w = kk1 * kk1 / (kk * kk); break;
                case 2: w = kk2 * kk2 / (kk * kk); break;
                default: w = 2.0 * kk1 * kk2 / (kk * kk); break;
            }
            out.at(k) += w * phase_integral(pf.phi(kk, kk1, kk2), tau) * fb.at(k1) * fb.at(k2);
        }
    }
    return out;
}

Spectrum oracle_P(int which, const Spectrum& f, double tau) {
    const TorusGrid& g = f.grid();
    if (which != 1 && which != 2)
        throw InvalidInputError("oracle_P: which must be 1 or 2");
    require_zero_mean(f, "oracle_P");
    Spectrum out(g);
    const Spectrum fb = conjugate(f);
    for (int k1 = g.min_mode(); k1 <= g.max_mode(); ++k1) {
        if (fb.at(k1) == Complex(0.0)) continue;
        for (int k2 = g.min_mode(); k2 <= g.max_mode(); ++k2) {
            const int k = k1 + k2;
            if (k == 0 || !keep_mode(g, k)) continue;
            const double kk = g.wavenumber(k);
            const double kk1 = g.wavenumber(k1);
            const double kk2 = g.wavenumber(k2);
            double w;
            Complex integral;
            if (which == 1) {
                // (e^{-2is k2^2} - 1)(e^{-2is k k1} - 1) expanded
                w = kk1 * kk1 / (kk * kk);
                integral = phase_integral(2.0 * (kk2 * kk2 + kk * kk1), tau) -
                           phase_integral(2.0 * kk2 * kk2, tau) -
                           phase_integral(2.0 * kk * kk1, tau) + phase_integral(0.0, tau);
            } else {
                // (e^{-2is k^2} - 1)(e^{2is k1 k2} - 1) expanded
                w = 2.0 * kk1 * kk2 / (kk * kk);
                integral = phase_integral(2.0 * (kk * kk - kk1 * kk2), tau) -
                           phase_integral(2.0 * kk * kk, tau) -
                           phase_integral(-2.0 * kk1 * kk2, tau) + phase_integral(0.0, tau);
            }
            out.at(k) += w * integral * fb.at(k1) * fb.at(k2);
        }
    }
    return out;
}

namespace {

// Right-hand side of the fully twisted equation: with v = e^{-it<dx^2>} u,
// v' = -i e^{-it<dx^2>} B [ (1/4) g^2 + (a t + b) g ],  g = u + conj(u).
Spectrum twisted_rhs(const Spectrum& v, double t, double a, double b) {
    const Spectrum u = fourier_multiplier(v, exp_i_t_bracket(t));
    const Spectrum gfun = u + conjugate(u);
    Spectrum n = 0.25 * pointwise_product(gfun, gfun);
    n += Complex(a * t + b, 0.0) * gfun;
    return Complex(0.0, -1.0) *
           fourier_multiplier(fourier_multiplier(n, op_b()), exp_i_t_bracket(-t));
}

}  // namespace

EvolutionState reference_evolve(const EvolutionState& s0, double T, double tau_ref,
                                ReferenceKind kind) {
    const auto n_steps = static_cast<std::size_t>(std::llround(T / tau_ref));
    if (std::abs(static_cast<double>(n_steps) * tau_ref - T) > 1e-9 * std::max(1.0, T))
        throw InvalidInputError("reference_evolve: tau_ref must divide T");

    if (kind == ReferenceKind::fine_step_psi1)
        return evolve(s0, tau_ref, n_steps);

    Spectrum v = fourier_multiplier(s0.u, exp_i_t_bracket(-s0.t));
    for (std::size_t n = 0; n < n_steps; ++n) {
        const double t = s0.t + static_cast<double>(n) * tau_ref;
        const double h = tau_ref;
        const Spectrum k1 = twisted_rhs(v, t, s0.a, s0.b);
        const Spectrum k2 = twisted_rhs(v + Complex(0.5 * h, 0.0) * k1, t + 0.5 * h, s0.a, s0.b);
        const Spectrum k3 = twisted_rhs(v + Complex(0.5 * h, 0.0) * k2, t + 0.5 * h, s0.a, s0.b);
        const Spectrum k4 = twisted_rhs(v + Complex(h, 0.0) * k3, t + h, s0.a, s0.b);
        Spectrum incr = k1;
        incr += Complex(2.0, 0.0) * k2;
        incr += Complex(2.0, 0.0) * k3;
        incr += k4;
        v += Complex(h / 6.0, 0.0) * incr;
        for (const auto& c : v.data())
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw DivergenceError("reference_evolve: non-finite state at step " +
                                          std::to_string(n),
                                      n);
    }
    const double t_end = s0.t + static_cast<double>(n_steps) * tau_ref;
    EvolutionState out{fourier_multiplier(v, exp_i_t_bracket(t_end)), s0.a, s0.b, t_end};
    out.u.at(0) = 0.0;
    return out;
}

}  // namespace oracle
}  // namespace gblrei
