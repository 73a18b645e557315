#ifndef GBLREI_ORACLE_HPP
#define GBLREI_ORACLE_HPP

#include <functional>
#include <string>

#include "gblrei/gb_core.hpp"
#include "gblrei/spectrum.hpp"

namespace gblrei {
namespace oracle {

// Real phase of a triple interaction, evaluated at physical wavenumbers.
// Convention: k = k1 + k2. For I2 the coefficient pair is (f at k1,
// conjugate-spectrum at k2), which turns its integrand into phase_i2.
struct PhaseFunction {
    std::string name;
    std::function<double(double kk, double k1, double k2)> phi;
};

PhaseFunction phase_i0();         // k^2 + k1^2 + k2^2
PhaseFunction phase_i1();         // k^2 - k1^2 - k2^2
PhaseFunction phase_i2();         // k^2 + k2^2 - k1^2 (k = k1 - k2)
PhaseFunction phase_t1_shift();   // 2 k2^2 + 2 k k1
PhaseFunction phase_t2_shift();   // 2 k1^2 + 2 k k2
PhaseFunction phase_t3_shift();   // 2 k^2 - 2 k1 k2

// int_0^tau e^{-is Phi} ds, switching to the limit value tau near Phi = 0.
Complex phase_integral(double phi, double tau);

// Brute-force per-mode quadrature of the defining integrals. Double sums run
// over represented modes only; product modes outside the grid are dropped and
// the Nyquist output mode stays zero, mirroring pointwise_product.
Spectrum oracle_I(int which, const Spectrum& f, double tau);
Spectrum oracle_T(int which, const Spectrum& f, double tau);
Spectrum oracle_P(int which, const Spectrum& f, double tau);

enum class ReferenceKind {
    integrating_factor_rk4,  // classical 4-stage method on the twisted equation
    fine_step_psi1,          // the scheme itself with tau_ref
};

// High-accuracy reference solution at time s0.t + T.
EvolutionState reference_evolve(const EvolutionState& s0, double T, double tau_ref,
                                ReferenceKind kind = ReferenceKind::integrating_factor_rk4);

}  // namespace oracle
}  // namespace gblrei

#endif
