#pragma once

#include "critnls/grid.hpp"

namespace critnls {

// reorder FFT-storage-indexed values (frequency 0 first) to the grid's
// natural spatial order (most negative coordinate first)
std::vector<cplx> storage_to_natural(const Grid& g, const std::vector<cplx>& v);

/// Band-limited (trigonometric) interpolation of samples given on a grid's
/// spatial lattice. Points outside the fundamental domain evaluate to zero
/// rather than wrapping periodically.
class TrigInterpolator {
public:
    TrigInterpolator(const Grid& g, const std::vector<cplx>& samples);

    // value at an arbitrary point (point[0..d-1])
    cplx eval(const double* point) const;

    // values at the lattice target.coord(j) / scale, for every grid index of
    // `target`; tensorized, O(n^2) per dimension
    std::vector<cplx> eval_scaled_lattice(const Grid& target, double scale) const;

private:
    // per-axis sum over modes with a running phasor
    void axis_weights(double point, std::vector<cplx>& w) const;

    Grid grid_;
    std::vector<cplx> coeff_;  // unnormalized mode amplitudes, FFT order
};

}  // namespace critnls
