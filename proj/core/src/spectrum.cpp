#include "gblrei/spectrum.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace gblrei {

namespace {

// FFTW's planner is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place DFT of v, sign = FFTW_FORWARD or FFTW_BACKWARD, unnormalized.
void dft(std::vector<Complex>& v, int sign) {
    const int n = static_cast<int>(v.size());
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    std::memcpy(buf, v.data(), sizeof(Complex) * v.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    std::memcpy(v.data(), buf, sizeof(Complex) * v.size());
    fftw_free(buf);
}

// Node 0 sits at x = -half_length, so mode k picks up the phase e^{-ik pi}
// relative to the plain DFT: f(x_j) = sum_k c_k (-1)^k e^{2 pi i jk/M}.
double mode_sign(int k) {
    return (k % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

Spectrum to_spectrum(const GridField& field) {
    const TorusGrid& g = field.grid();
    const int m = g.num_points();
    std::vector<Complex> v = field.samples();
    dft(v, FFTW_FORWARD);
    Spectrum out(g);
    for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
        const int i = k >= 0 ? k : k + m;
        out.at(k) = v[static_cast<std::size_t>(i)] * (mode_sign(k) / m);
    }
    return out;
}

GridField from_spectrum(const Spectrum& spec) {
    const TorusGrid& g = spec.grid();
    const int m = g.num_points();
    std::vector<Complex> v(static_cast<std::size_t>(m));
    for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
        const int i = k >= 0 ? k : k + m;
        v[static_cast<std::size_t>(i)] = spec.at(k) * mode_sign(k);
    }
    dft(v, FFTW_BACKWARD);
    return GridField(g, std::move(v));
}

Spectrum pointwise_product(const Spectrum& f, const Spectrum& g, bool dealias) {
    if (f.grid() != g.grid())
        throw InvalidInputError("pointwise_product: grid mismatch");
    const TorusGrid& grid = f.grid();
    const int m = grid.num_points();
    const int m2 = 2 * m;

    auto pad = [&](const Spectrum& s) {
        std::vector<Complex> v(static_cast<std::size_t>(m2));
        for (int k = grid.min_mode(); k <= grid.max_mode(); ++k) {
            if (dealias && std::abs(k) > m / 3) continue;
            const int i = k >= 0 ? k : k + m2;
            v[static_cast<std::size_t>(i)] = s.at(k);
        }
        dft(v, FFTW_BACKWARD);
        return v;
    };

    std::vector<Complex> a = pad(f);
    const std::vector<Complex> b = pad(g);
    for (int j = 0; j < m2; ++j)
        a[static_cast<std::size_t>(j)] *= b[static_cast<std::size_t>(j)];
    dft(a, FFTW_FORWARD);

    Spectrum out(grid);
    // drop modes beyond the represented range; the Nyquist mode -M/2 stays
    // zero so real-valued spectra remain exactly conjugate symmetric
    for (int k = grid.min_mode() + 1; k <= grid.max_mode(); ++k) {
        const int i = k >= 0 ? k : k + m2;
        out.at(k) = a[static_cast<std::size_t>(i)] / static_cast<double>(m2);
    }
    return out;
}

double sobolev_norm(const Spectrum& f, double r) {
    const TorusGrid& g = f.grid();
    double sum = 0.0;
    for (int k = g.min_mode(); k <= g.max_mode(); ++k) {
        const double kappa = g.wavenumber(k);
        sum += std::pow(1.0 + kappa * kappa, r) * std::norm(f.at(k));
    }
    return std::sqrt(sum);
}

Spectrum conjugate(const Spectrum& f) {
    const TorusGrid& g = f.grid();
    Spectrum out(g);
    for (int k = g.min_mode() + 1; k <= g.max_mode(); ++k)
        out.at(k) = std::conj(f.at(-k));
    out.at(g.min_mode()) = std::conj(f.at(g.min_mode()));
    return out;
}

Spectrum operator+(const Spectrum& a, const Spectrum& b) {
    Spectrum out = a;
    out += b;
    return out;
}

Spectrum operator-(const Spectrum& a, const Spectrum& b) {
    Spectrum out = a;
    out -= b;
    return out;
}

Spectrum operator*(Complex s, const Spectrum& a) {
    Spectrum out = a;
    for (auto& c : out.data()) c *= s;
    return out;
}

Spectrum& operator+=(Spectrum& a, const Spectrum& b) {
    if (a.grid() != b.grid())
        throw InvalidInputError("Spectrum +: grid mismatch");
    for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] += b.data()[i];
    return a;
}

Spectrum& operator-=(Spectrum& a, const Spectrum& b) {
    if (a.grid() != b.grid())
        throw InvalidInputError("Spectrum -: grid mismatch");
    for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] -= b.data()[i];
    return a;
}

}  // namespace gblrei
