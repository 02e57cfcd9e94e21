#pragma once

#include <functional>
#include <optional>

#include "critnls/grid.hpp"

namespace critnls {

/// Final data u_plus, held as samples of its Fourier transform on the
/// frequency lattice, optionally backed by a closed-form evaluator
/// (presets) so the profile can be evaluated off-grid without
/// interpolation error. delta is the weight of the homogeneous negative
/// Sobolev norm and must lie in (d/2, (d+1)/2).
class FinalData {
public:
    // evaluator of u_plus_hat at an arbitrary frequency point (xi[0..d-1])
    using Evaluator = std::function<cplx(const double*)>;

    FinalData(const Grid& g, std::vector<cplx> hat_samples, double delta);
    FinalData(const Grid& g, Evaluator hat_closed, double delta);

    const Grid& grid() const { return grid_; }
    const Field& u_plus_hat() const { return hat_; }
    double delta() const { return delta_; }

    bool has_closed_form() const { return static_cast<bool>(closed_); }
    cplx eval_hat(const double* xi) const { return closed_(xi); }

    double sup_norm() const { return sup_norm_; }          // L^inf of u_plus_hat
    double h0d_norm() const { return h0d_norm_; }          // ||<x>^d u_plus||_2
    double hneg_delta_norm() const { return hneg_norm_; }  // |||xi|^{-delta} u_plus_hat||_2, zero mode dropped

    // largest |xi|_inf grid point carrying |u_plus_hat| > rel_tol * sup
    double support_radius(double rel_tol = 1e-8) const;

private:
    void compute_norms();

    Grid grid_;
    Field hat_;
    Evaluator closed_;
    double delta_;
    double sup_norm_ = 0.0, h0d_norm_ = 0.0, hneg_norm_ = 0.0;
};

// log-phase of the modified profile at one point; the coefficient 1/2 is
// what the resonant reduced equation i w_t = (2t)^{-1} g_1 |w|^{2/d} w
// demands under the propagator e^{it Laplacian}
cplx log_phase_factor(cplx u_hat, double g1, double t, int d);

// w_hat(t) = u_plus_hat * exp(-i (g1/2) |u_plus_hat|^{2/d} log t) on the grid
Field hat_w(const FinalData& fd, double t, double g1);

// u_p(t, x) = (2it)^{-d/2} e^{i|x|^2/4t} w_hat(t)(x/2t); closed-form data is
// evaluated exactly, sampled data by trigonometric interpolation
Field build_profile(const FinalData& fd, double t, double g1);

// U(t) = e^{it Laplacian}: multiplier e^{-it |xi|^2}. Space-side fields are
// transformed, multiplied and transformed back; frequency-side fields are
// multiplied in place.
Field free_propagate(const Field& f, double t);

// largest T such that the profile support 2T * support_radius stays inside
// the box with the given safety margin
double profile_time_cap(const FinalData& fd, double safety = 0.95, double rel_tol = 1e-8);

}  // namespace critnls
