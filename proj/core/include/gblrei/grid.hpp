#ifndef GBLREI_GRID_HPP
#define GBLREI_GRID_HPP

#include <cmath>

#include "gblrei/errors.hpp"

namespace gblrei {

// Uniform periodic grid on [-half_length, half_length) with M (even) nodes.
// Integer mode k carries the physical wavenumber kappa(k) = k*pi/half_length,
// so the same code serves [-pi,pi] and stretched domains like [-80,80].
class TorusGrid {
public:
    TorusGrid(double half_length, int num_points)
        : half_length_(half_length), num_points_(num_points) {
        if (!(half_length > 0.0))
            throw InvalidInputError("TorusGrid: half_length must be positive");
        if (num_points < 4 || num_points % 2 != 0)
            throw InvalidInputError("TorusGrid: num_points must be even and >= 4");
    }

    double half_length() const { return half_length_; }
    int num_points() const { return num_points_; }

    // node j, 0 <= j < M; node 0 at -half_length, none at +half_length
    double node(int j) const {
        return -half_length_ + j * (2.0 * half_length_ / num_points_);
    }

    double wavenumber(int k) const {
        return k * M_PI / half_length_;
    }

    // represented modes: min_mode() <= k <= max_mode()
    int min_mode() const { return -num_points_ / 2; }
    int max_mode() const { return num_points_ / 2 - 1; }

    bool contains_mode(int k) const {
        return k >= min_mode() && k <= max_mode();
    }

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
        return a.half_length_ == b.half_length_ && a.num_points_ == b.num_points_;
    }
    friend bool operator!=(const TorusGrid& a, const TorusGrid& b) { return !(a == b); }

private:
    double half_length_;
    int num_points_;
};

}  // namespace gblrei

#endif
