#ifndef GBLREI_SYMBOLS_HPP
#define GBLREI_SYMBOLS_HPP

#include <functional>
#include <string>

#include "gblrei/spectrum.hpp"

namespace gblrei {

enum class ZeroModeRule { evaluate, force_zero, force_one };

// A Fourier multiplier: a pure map from the physical wavenumber kappa(k) to a
// complex factor, with a dedicated rule for the zero mode.
struct Symbol {
    std::function<Complex(double kappa)> map;
    ZeroModeRule zero_mode = ZeroModeRule::evaluate;

    Complex operator()(double kappa) const { return map(kappa); }
};

// Applies sym mode-by-mode: out(k) = sym(kappa(k)) * f(k), zero-mode rule
// applied at k = 0. Throws NumericDomainError if the symbol is non-finite at
// a needed mode.
Spectrum fourier_multiplier(const Spectrum& spec, const Symbol& sym);

// The operator vocabulary of the scheme.
Symbol inv_dx_pow(double alpha);       // (i kappa)^(-alpha), zero mode -> 0
Symbol abs_dx_pow(double alpha);       // |kappa|^alpha, zero mode -> 0
Symbol j_pow(double alpha);            // (1 + kappa^2)^(alpha/2)
Symbol bracket();                      // <dx^2> = sqrt(kappa^2 + kappa^4)
Symbol bracket_inv();                  // 1/sqrt(kappa^2 + kappa^4), zero mode -> 0
Symbol exp_i_t_dx2(double t);          // e^{it dx^2}: e^{-it kappa^2}
Symbol exp_i_t_bracket(double t);      // e^{it <dx^2>}: e^{it sqrt(kappa^2+kappa^4)}
Symbol op_a();                         // <dx^2> + dx^2: sqrt(kappa^2+kappa^4) - kappa^2
Symbol op_b();                         // <dx^2>^{-1} dx^2: -kappa^2/sqrt(kappa^2+kappa^4), zero mode -> 0
Symbol psi1_two_i_tau(double tau);     // psi1(2 i tau dx^2): (e^{-2 i tau kappa^2}-1)/(-2 i tau kappa^2), zero mode -> 1

// Name-based lookup. Names: inv_dx_pow, abs_dx_pow, j_pow, bracket,
// bracket_inv, exp_i_t_dx2, exp_i_t_bracket, op_A, op_B, psi1_two_i_tau.
// param feeds alpha/t/tau where applicable.
Symbol standard_symbol(const std::string& name, double param = 0.0);

}  // namespace gblrei

#endif
