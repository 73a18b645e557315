#ifndef GBLREI_SPECTRUM_HPP
#define GBLREI_SPECTRUM_HPP

#include <complex>
#include <vector>

#include "gblrei/grid.hpp"

namespace gblrei {

using Complex = std::complex<double>;

// Complex samples at the grid nodes.
class GridField {
public:
    explicit GridField(TorusGrid grid)
        : grid_(grid), samples_(static_cast<std::size_t>(grid.num_points())) {}
    GridField(TorusGrid grid, std::vector<Complex> samples)
        : grid_(grid), samples_(std::move(samples)) {
        if (static_cast<int>(samples_.size()) != grid_.num_points())
            throw InvalidInputError("GridField: sample count does not match grid");
    }

    const TorusGrid& grid() const { return grid_; }
    Complex& operator[](int j) { return samples_[static_cast<std::size_t>(j)]; }
    const Complex& operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }
    std::vector<Complex>& samples() { return samples_; }
    const std::vector<Complex>& samples() const { return samples_; }

private:
    TorusGrid grid_;
    std::vector<Complex> samples_;
};

// Fourier coefficients indexed by integer mode k in {-M/2, ..., M/2-1}.
// Storage follows the FFT layout: index i holds mode i for i < M/2, mode i-M
// otherwise. The coefficient of mode 0 is the mean value of the field.
class Spectrum {
public:
    explicit Spectrum(TorusGrid grid)
        : grid_(grid), c_(static_cast<std::size_t>(grid.num_points())) {}

    const TorusGrid& grid() const { return grid_; }
    int num_modes() const { return grid_.num_points(); }

    Complex& at(int k) { return c_[index_of(k)]; }
    const Complex& at(int k) const { return c_[index_of(k)]; }

    std::vector<Complex>& data() { return c_; }
    const std::vector<Complex>& data() const { return c_; }

private:
    std::size_t index_of(int k) const {
        if (!grid_.contains_mode(k))
            throw InvalidInputError("Spectrum: mode index out of range");
        return static_cast<std::size_t>(k >= 0 ? k : k + grid_.num_points());
    }

    TorusGrid grid_;
    std::vector<Complex> c_;
};

// Transforms. Forward normalization puts the mean value in mode 0, i.e. the
// constant field 1 maps to mode 0 coefficient 1.
Spectrum to_spectrum(const GridField& field);
GridField from_spectrum(const Spectrum& spec);

// f_hat(k) * g_hat convolution realized through padded transforms: product
// modes falling outside the represented range are dropped (no wrap-around),
// and the unpaired Nyquist mode -M/2 is zeroed. With dealias set, input modes
// with |k| > M/3 are zeroed first (2/3 rule).
Spectrum pointwise_product(const Spectrum& f, const Spectrum& g, bool dealias = false);

// || f ||_{H^r} = sqrt(sum_k (1+kappa^2)^r |f_k|^2)
double sobolev_norm(const Spectrum& f, double r);

// Coefficients of the complex conjugate field: out(k) = conj(f(-k)).
// The unpaired mode -M/2 conjugates in place.
Spectrum conjugate(const Spectrum& f);

// Arithmetic on spectra over the same grid.
Spectrum operator+(const Spectrum& a, const Spectrum& b);
Spectrum operator-(const Spectrum& a, const Spectrum& b);
Spectrum operator*(Complex s, const Spectrum& a);
Spectrum& operator+=(Spectrum& a, const Spectrum& b);
Spectrum& operator-=(Spectrum& a, const Spectrum& b);

}  // namespace gblrei

#endif
