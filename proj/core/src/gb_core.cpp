#include "gblrei/gb_core.hpp"

#include <cmath>

namespace gblrei {

namespace {

const Complex kI(0.0, 1.0);

void require_zero_mean(const Spectrum& f, const char* who) {
    const double scale = std::max(1.0, sobolev_norm(f, 0.0));
    if (std::abs(f.at(0)) > 1e-12 * scale)
        throw PreconditionError(std::string(who) + ": nonzero mean mode");
}

double max_imag(const GridField& f) {
    double m = 0.0;
    for (const auto& v : f.samples()) m = std::max(m, std::abs(v.imag()));
    return m;
}

double max_abs(const GridField& f) {
    double m = 0.0;
    for (const auto& v : f.samples()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

EvolutionState homogenize(const GBState& initial) {
    if (initial.t != 0.0)
        throw InvalidInputError("homogenize: initial state must be at t = 0");
    const double scale = std::max({1.0, max_abs(initial.z), max_abs(initial.z_t)});
    if (max_imag(initial.z) > 1e-10 * scale || max_imag(initial.z_t) > 1e-10 * scale)
        throw InvalidInputError("homogenize: inputs must be real valued");

    Spectrum zs = to_spectrum(initial.z);
    Spectrum zts = to_spectrum(initial.z_t);
    const double b = zs.at(0).real();
    const double a = zts.at(0).real();
    zs.at(0) = 0.0;
    zts.at(0) = 0.0;

    EvolutionState s{zs - kI * fourier_multiplier(zts, bracket_inv()), a, b, 0.0};
    s.u.at(0) = 0.0;
    return s;
}

GBState recover_state(const EvolutionState& s) {
    const Spectrum ub = conjugate(s.u);
    Spectrum zs = 0.5 * (s.u + ub);
    zs.at(0) += s.a * s.t + s.b;
    Spectrum zts = (0.5 * kI) * fourier_multiplier(s.u - ub, bracket());
    zts.at(0) += s.a;
    return GBState{from_spectrum(zs), from_spectrum(zts), s.t};
}

Spectrum eval_I1(const Spectrum& f, double tau, const StepOptions& opts) {
    require_zero_mean(f, "eval_I1");
    const Spectrum g = fourier_multiplier(f, inv_dx_pow(1));
    const Spectrum h = fourier_multiplier(g, exp_i_t_dx2(-tau));
    const Spectrum sq0 = pointwise_product(g, g, opts.dealias);
    const Spectrum sq1 =
        fourier_multiplier(pointwise_product(h, h, opts.dealias), exp_i_t_dx2(tau));
    return (0.5 * kI) * (sq0 - sq1);
}

Spectrum eval_I2(const Spectrum& f, double tau, const StepOptions& opts) {
    require_zero_mean(f, "eval_I2");
    const Spectrum fb = conjugate(f);
    const Spectrum gb = fourier_multiplier(fb, inv_dx_pow(1));

    const Spectrum prod1 = pointwise_product(fourier_multiplier(f, exp_i_t_dx2(-tau)),
                                             fourier_multiplier(gb, exp_i_t_dx2(tau)),
                                             opts.dealias);
    Spectrum out = (-0.5 * kI) * fourier_multiplier(
                                     fourier_multiplier(prod1, inv_dx_pow(1)),
                                     exp_i_t_dx2(tau));
    out += (0.5 * kI) *
           fourier_multiplier(pointwise_product(f, gb, opts.dealias), inv_dx_pow(1));
    // discrete ||f||^2; the unpaired Nyquist mode has no conjugate partner in
    // the truncated quadrature and is excluded
    double l2sq = 0.0;
    for (int k = f.grid().min_mode() + 1; k <= f.grid().max_mode(); ++k)
        l2sq += std::norm(f.at(k));
    out.at(0) += tau * l2sq;
    return out;
}

Spectrum eval_T0(const Spectrum& f, double tau, const StepOptions& opts) {
    require_zero_mean(f, "eval_T0");
    const Spectrum fb = conjugate(f);
    const Spectrum q = fourier_multiplier(fb, inv_dx_pow(1));
    const Spectrum qe = fourier_multiplier(q, exp_i_t_dx2(tau));
    Spectrum out(f.grid());
    out.at(0) = (0.5 * kI) * (pointwise_product(qe, qe, opts.dealias).at(0) -
                              pointwise_product(q, q, opts.dealias).at(0)) +
                tau * fb.at(0) * fb.at(0);
    return out;
}

StepTerms eval_L_terms(const Spectrum& f, double tau, const StepOptions& opts) {
    require_zero_mean(f, "eval_L_terms");
    const bool da = opts.dealias;
    const Spectrum fb = conjugate(f);
    const Spectrum d1 = fourier_multiplier(fb, inv_dx_pow(-1));   // dx fbar
    const Spectrum d2 = fourier_multiplier(fb, inv_dx_pow(-2));   // dx^2 fbar
    const Spectrum m2 = fourier_multiplier(fb, inv_dx_pow(2));    // dx^-2 fbar

    Spectrum l1 = (-0.5 * kI) * fourier_multiplier(
                      pointwise_product(fourier_multiplier(m2, exp_i_t_dx2(2.0 * tau)),
                                        d2, da),
                      inv_dx_pow(2));
    l1 += (0.5 * kI) *
          fourier_multiplier(pointwise_product(d2, m2, da), inv_dx_pow(2));

    Spectrum l2 = (-0.5 * kI) * fourier_multiplier(
                      fourier_multiplier(
                          pointwise_product(fourier_multiplier(d1, exp_i_t_dx2(tau)),
                                            fourier_multiplier(fb, exp_i_t_dx2(-tau)), da),
                          inv_dx_pow(3)),
                      exp_i_t_dx2(tau));
    l2 += (0.5 * kI) *
          fourier_multiplier(pointwise_product(d1, fb, da), inv_dx_pow(3));
    l2 -= Complex(tau, 0.0) *
          fourier_multiplier(pointwise_product(d2, fb, da), inv_dx_pow(2));

    const Spectrum dsq = pointwise_product(d1, d1, da);
    const Spectrum l3 =
        (-kI) * fourier_multiplier(
                    fourier_multiplier(dsq, exp_i_t_dx2(2.0 * tau)) - dsq,
                    inv_dx_pow(4));

    const Spectrum fbe = fourier_multiplier(fb, exp_i_t_dx2(tau));
    Spectrum l4 = kI * fourier_multiplier(
                      fourier_multiplier(pointwise_product(fbe, fbe, da),
                                         exp_i_t_dx2(-tau)),
                      inv_dx_pow(2));
    l4 -= kI * fourier_multiplier(pointwise_product(fb, fb, da), inv_dx_pow(2));
    l4 -= Complex(2.0 * tau, 0.0) * fourier_multiplier(dsq, inv_dx_pow(2));

    StepTerms terms{Spectrum(f.grid()), Spectrum(f.grid()), Spectrum(f.grid()),
                    std::move(l1), std::move(l2), std::move(l3), std::move(l4)};
    return terms;
}

StepTerms eval_step_terms(const Spectrum& f, double tau, const StepOptions& opts) {
    StepTerms terms = eval_L_terms(f, tau, opts);
    terms.i1 = eval_I1(f, tau, opts);
    terms.i2 = eval_I2(f, tau, opts);
    terms.t0 = eval_T0(f, tau, opts);
    return terms;
}

EvolutionState step(const EvolutionState& s, double tau, const StepOptions& opts) {
    if (!(tau > 0.0)) throw InvalidInputError("step: tau must be positive");
    require_zero_mean(s.u, "step");

    const Symbol prop = exp_i_t_bracket(tau);
    auto b_tau = [&](const Spectrum& x) {
        return fourier_multiplier(fourier_multiplier(x, prop), op_b());
    };

    const StepTerms t = eval_step_terms(s.u, tau, opts);
    Spectrum combo = 2.0 * Complex(1.0, 0.0) * t.l1;
    combo += 2.0 * Complex(1.0, 0.0) * t.l2;
    combo += t.l3;
    combo += t.l4;
    combo += t.i1;
    combo += 2.0 * Complex(1.0, 0.0) * t.i2;

    Spectrum u_next = fourier_multiplier(s.u, prop);
    u_next -= (0.25 * kI) * b_tau(combo);
    const Complex src = kI * tau * (s.a * s.t + s.b);
    u_next -= src * b_tau(s.u + fourier_multiplier(conjugate(s.u), psi1_two_i_tau(tau)));
    u_next.at(0) = 0.0;

    return EvolutionState{std::move(u_next), s.a, s.b, s.t + tau};
}

EvolutionState evolve(const EvolutionState& s0, double tau, std::size_t n_steps,
                      const StepOptions& opts, const StepObserver& observer) {
    EvolutionState s = s0;
    for (std::size_t n = 0; n < n_steps; ++n) {
        s = step(s, tau, opts);
        s.t = s0.t + static_cast<double>(n + 1) * tau;  // exact step count, no drift
        for (const auto& c : s.u.data()) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw DivergenceError("evolve: non-finite state after step " +
                                          std::to_string(n),
                                      n);
        }
        if (observer) observer(s, n);
    }
    return s;
}

RegularityRequirement regularity_requirement(double r) {
    if (r < 1.0) throw OutOfDomainError("regularity_requirement: r must be >= 1");
    if (r == 1.0) return {1.0, false};
    if (r <= 7.0 / 6.0) return {3.0 - 2.0 * r, true};
    if (r <= 17.0 / 12.0) return {2.0 / 3.0, false};
    if (r <= 1.5) return {3.5 - 2.0 * r, true};
    if (r < 2.5) return {1.25 - 0.5 * r, false};
    if (r == 2.5) return {0.0, true};
    return {0.0, false};
}

}  // namespace gblrei
