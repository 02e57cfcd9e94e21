#pragma once

#include "critnls/finalstate.hpp"

namespace critnls {

struct ErrorPoint {
    double t;
    double l2_error;
    double xd_norm;
};

struct FitResult {
    double exponent;
    double r_squared;
    int points_used;
};

// ||u(t) - u_p(t)|| in L^2 and X_d at every recorded time
std::vector<ErrorPoint> error_series(const Trajectory& traj, const FinalData& fd, double g1);

// OLS of -log(value) against log(t) over points with t >= t_min and positive
// value; at least 4 such points required
FitResult fit_decay(const std::vector<std::pair<double, double>>& series, double t_min);
FitResult fit_decay(const std::vector<ErrorPoint>& series, double t_min);

// || int_t^{T_max} U(t-s) N(u_p)(s) ds ||_2 over the geometric nodes, by the
// same quadrature as the Picard map; requires modes >= 32
std::vector<std::pair<double, double>> nonresonant_duhamel(const FinalData& fd,
                                                           const AngularFunction& nl,
                                                           const TheoremParameters& p,
                                                           int node_count, int modes);

}  // namespace critnls
