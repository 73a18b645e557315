#ifndef GBLREI_GB_CORE_HPP
#define GBLREI_GB_CORE_HPP

#include <functional>
#include <optional>

#include "gblrei/spectrum.hpp"
#include "gblrei/symbols.hpp"

namespace gblrei {

// Physical pair (z, z_t) sampled on the grid. Both fields are real valued up
// to roundoff; the imaginary residue after recovery stays below 1e-10.
struct GBState {
    GridField z;
    GridField z_t;
    double t = 0.0;
};

// The complex unknown of the reformulated equation plus the exactly-evolving
// mean scalars. Mode 0 of u is kept exactly zero.
struct EvolutionState {
    Spectrum u;
    double a = 0.0;  // mean of initial z_t
    double b = 0.0;  // mean of initial z
    double t = 0.0;
};

// The exactly-integrated pieces of one step for a given (f, tau).
struct StepTerms {
    Spectrum i1, i2, t0, l1, l2, l3, l4;
};

struct StepOptions {
    bool dealias = false;
};

// Split off the mean (which evolves as a + b t) and form
// u = (z - b) - i <dx^2>^{-1} (z_t - a).
EvolutionState homogenize(const GBState& initial);

// z = (u + conj u)/2 + a t + b,  z_t = (i/2) <dx^2> (u - conj u) + a.
GBState recover_state(const EvolutionState& s);

// Closed forms of the time integrals, valid for f with zero mean mode.
Spectrum eval_I1(const Spectrum& f, double tau, const StepOptions& opts = {});
Spectrum eval_I2(const Spectrum& f, double tau, const StepOptions& opts = {});
Spectrum eval_T0(const Spectrum& f, double tau, const StepOptions& opts = {});
StepTerms eval_L_terms(const Spectrum& f, double tau, const StepOptions& opts = {});

// All seven terms at once.
StepTerms eval_step_terms(const Spectrum& f, double tau, const StepOptions& opts = {});

// One step of the first-order integrator.
EvolutionState step(const EvolutionState& s, double tau, const StepOptions& opts = {});

using StepObserver = std::function<void(const EvolutionState&, std::size_t step_index)>;

// n_steps-fold composition of step. Time is carried as s0.t + n*tau computed
// from the exact step count, not by running accumulation.
EvolutionState evolve(const EvolutionState& s0, double tau, std::size_t n_steps,
                      const StepOptions& opts = {},
                      const StepObserver& observer = nullptr);

// Additional regularity p(r) required for first-order convergence in H^r.
// strict_plus marks the branches where the printed value needs "+epsilon".
struct RegularityRequirement {
    double value;
    bool strict_plus;
};
RegularityRequirement regularity_requirement(double r);

}  // namespace gblrei

#endif
