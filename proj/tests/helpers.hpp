#ifndef GBLREI_TEST_HELPERS_HPP
#define GBLREI_TEST_HELPERS_HPP

#include <cmath>

#include "gblrei/harness.hpp"

namespace gblrei {
namespace test {

// e^{i m pi x / L} as a spectrum: a single unit coefficient at mode m.
inline Spectrum single_mode(const TorusGrid& grid, int m, Complex c = 1.0) {
    Spectrum s(grid);
    s.at(m) = c;
    return s;
}

inline double rel_l2(const Spectrum& a, const Spectrum& b) {
    const double scale = std::max({sobolev_norm(a, 0.0), sobolev_norm(b, 0.0), 1e-300});
    return sobolev_norm(a - b, 0.0) / scale;
}

inline double max_mode_diff(const Spectrum& a, const Spectrum& b) {
    double worst = 0.0;
    const auto& g = a.grid();
    for (int k = g.min_mode(); k <= g.max_mode(); ++k)
        worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    return worst;
}

}  // namespace test
}  // namespace gblrei

#endif
