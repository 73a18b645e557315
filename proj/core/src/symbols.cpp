#include "gblrei/symbols.hpp"

#include <cmath>

namespace gblrei {

Spectrum fourier_multiplier(const Spectrum& spec, const Symbol& sym) {
    const TorusGrid& g = spec.grid();
    Spectrum out(g);
    for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
        Complex factor;
        if (k == 0) {
            switch (sym.zero_mode) {
                case ZeroModeRule::force_zero: factor = 0.0; break;
                case ZeroModeRule::force_one: factor = 1.0; break;
                case ZeroModeRule::evaluate: factor = sym(0.0); break;
            }
        } else {
            factor = sym(g.wavenumber(k));
        }
        if (!std::isfinite(factor.real()) || !std::isfinite(factor.imag()))
            throw NumericDomainError("fourier_multiplier: symbol non-finite at mode " +
                                     std::to_string(k));
        out.at(k) = factor * spec.at(k);
    }
    return out;
}

Symbol inv_dx_pow(double alpha) {
    return {[alpha](double kappa) { return std::pow(Complex(0.0, kappa), -alpha); },
            ZeroModeRule::force_zero};
}

Symbol abs_dx_pow(double alpha) {
    return {[alpha](double kappa) { return Complex(std::pow(std::abs(kappa), alpha), 0.0); },
            ZeroModeRule::force_zero};
}

Symbol j_pow(double alpha) {
    return {[alpha](double kappa) {
                return Complex(std::pow(1.0 + kappa * kappa, alpha / 2.0), 0.0);
            },
            ZeroModeRule::evaluate};
}

Symbol bracket() {
    return {[](double kappa) {
                const double k2 = kappa * kappa;
                return Complex(std::sqrt(k2 + k2 * k2), 0.0);
            },
            ZeroModeRule::evaluate};
}

Symbol bracket_inv() {
    return {[](double kappa) {
                const double k2 = kappa * kappa;
                return Complex(1.0 / std::sqrt(k2 + k2 * k2), 0.0);
            },
            ZeroModeRule::force_zero};
}

Symbol exp_i_t_dx2(double t) {
    return {[t](double kappa) { return std::exp(Complex(0.0, -t * kappa * kappa)); },
            ZeroModeRule::evaluate};
}

Symbol exp_i_t_bracket(double t) {
    return {[t](double kappa) {
                const double k2 = kappa * kappa;
                return std::exp(Complex(0.0, t * std::sqrt(k2 + k2 * k2)));
            },
            ZeroModeRule::evaluate};
}

Symbol op_a() {
    return {[](double kappa) {
                const double k2 = kappa * kappa;
                return Complex(std::sqrt(k2 + k2 * k2) - k2, 0.0);
            },
            ZeroModeRule::evaluate};
}

Symbol op_b() {
    return {[](double kappa) {
                const double k2 = kappa * kappa;
                return Complex(-k2 / std::sqrt(k2 + k2 * k2), 0.0);
            },
            ZeroModeRule::force_zero};
}

Symbol psi1_two_i_tau(double tau) {
    return {[tau](double kappa) {
                const Complex y(0.0, -2.0 * tau * kappa * kappa);
                if (std::abs(y) < 1e-12) return 1.0 + 0.5 * y;  // psi1(0) = 1
                return (std::exp(y) - 1.0) / y;
            },
            ZeroModeRule::force_one};
}

Symbol standard_symbol(const std::string& name, double param) {
    if (name == "inv_dx_pow") return inv_dx_pow(param);
    if (name == "abs_dx_pow") return abs_dx_pow(param);
    if (name == "j_pow") return j_pow(param);
    if (name == "bracket") return bracket();
    if (name == "bracket_inv") return bracket_inv();
    if (name == "exp_i_t_dx2") return exp_i_t_dx2(param);
    if (name == "exp_i_t_bracket") return exp_i_t_bracket(param);
    if (name == "op_A") return op_a();
    if (name == "op_B") return op_b();
    if (name == "psi1_two_i_tau") return psi1_two_i_tau(param);
    throw InvalidInputError("standard_symbol: unknown name '" + name + "'");
}

}  // namespace gblrei
