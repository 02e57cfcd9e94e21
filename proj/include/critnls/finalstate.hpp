#pragma once

#include "critnls/nonlinearity.hpp"
#include "critnls/profile.hpp"
#include "critnls/spectral.hpp"

namespace critnls {

/// Scattering-construction parameters. gamma is derived from (d, delta);
/// construction throws with the offending key when a constraint fails.
struct TheoremParameters {
    int d = 1;
    double delta = 0.75;
    double gamma = 0.375;
    double b = 0.3;
    double eta = 0.5;
    double T = 1.0;
    double T_max = 2.0;
    double eps = 0.1;

    static TheoremParameters make(int d, double delta, double b, double eta, double T,
                                  double T_max, double eps);
    static double default_delta(int d) { return d == 1 ? 0.75 : 1.25; }
    static double default_b(int d) { return 0.25 * d + 0.05; }
    void validate() const;
};

// resonant coefficient g_1 = Re of the n = 1 Fourier mode of the angular function
double resonant_coefficient(const AngularFunction& nl);

// Backward construction of the final-state solution: u(T_max) := u_p(T_max),
// integrate to T, return the trajectory reordered to increasing time.
Trajectory construct_backward(const FinalData& fd, const AngularFunction& nl,
                              const TheoremParameters& p, int steps,
                              int record_count = 128, const StepOptions& opts = {});

// R(t) phi = M(t) D(t) (U(-1/4t) - 1) phi for a function phi given by samples
// on the frequency lattice: the propagator acts spectrally on the frequency
// variable, then the dilation is evaluated by trigonometric interpolation.
Field apply_R(const Grid& g, const std::vector<cplx>& freq_samples, double t);

// same operator through the identity M D U(-1/4t) = U(t) F^{-1}, usable when
// phi can be evaluated off-grid (closed-form data); cheaper by one NUDFT
Field apply_R_via_identity(const Grid& g, const std::vector<cplx>& freq_samples,
                           const std::function<cplx(const double*)>& phi_closed, double t);

// R(t) w_hat(t)
Field operator_R(const FinalData& fd, double t, double g1);

// geometric quadrature nodes, t_0 = T, t_K = T_max, constant ratio
std::vector<double> geometric_nodes(double T, double T_max, int count);

// suffix Duhamel integrals int_{t_i}^{T_max} U(t_i - s) G(s) ds over the node
// trajectory by composite trapezoid, accumulated on the frequency side
std::vector<Field> duhamel_suffix(const std::vector<double>& nodes,
                                  const std::vector<Field>& integrand);

/// Fixed-point map of the final-state integral equation on [T, T_max]:
///   Phi(v)(t) = u_p(t) + i I[F(v) - F(u_p)](t) + R(t) w_hat
///               - i I[R G_1(w_hat) / (2s)](t) + i I[N(u_p)](t),
/// I the suffix Duhamel integral. The terms independent of v are precomputed.
class PicardOperator {
public:
    PicardOperator(const FinalData& fd, const AngularFunction& nl,
                   const TheoremParameters& p, int node_count, int modes);

    const std::vector<double>& nodes() const { return nodes_; }
    const Trajectory& profile_trajectory() const { return profile_; }
    Trajectory apply(const Trajectory& v) const;

private:
    FinalData fd_;
    AngularFunction nl_;
    TheoremParameters p_;
    std::vector<double> nodes_;
    Trajectory profile_;              // u_p at the nodes (Picard initial iterate)
    std::vector<Field> fixed_part_;   // u_p + R w_hat - i I2 + i I3 at the nodes
};

// one application of the map; v must live on the geometric nodes of [T, T_max]
Trajectory picard_map(const Trajectory& v, const FinalData& fd, const AngularFunction& nl,
                      const TheoremParameters& p, int modes = 64);

// sup_t t^b ||v(t)||_2 + sup_t t^b (int_t^{T_max} ||v(s)||_{X_d}^4 ds)^{1/4},
// X_1 = sup norm, X_2 = L^4; trapezoid in time over the trajectory nodes
double weighted_norm_X(const Trajectory& v_minus_up, const TheoremParameters& p);

// last-node integrand magnitude t_K^b ||v(t_K)||_{X_d}, the reported proxy for
// the tail dropped by truncating at T_max
double weighted_norm_tail_proxy(const Trajectory& v_minus_up, const TheoremParameters& p);

}  // namespace critnls
