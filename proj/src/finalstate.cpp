#include "critnls/finalstate.hpp"

#include <cmath>

#include "critnls/fft.hpp"
#include "critnls/interp.hpp"

namespace critnls {

TheoremParameters TheoremParameters::make(int d, double delta, double b, double eta,
                                          double T, double T_max, double eps) {
    TheoremParameters p;
    p.d = d;
    p.delta = delta;
    p.gamma = d == 1 ? 0.5 * delta : (delta + 2.0) / 6.0;
    p.b = std::isnan(b) ? default_b(d) : b;
    p.eta = eta;
    p.T = T;
    p.T_max = T_max;
    p.eps = eps;
    p.validate();
    return p;
}

void TheoremParameters::validate() const {
    if (d != 1 && d != 2) throw std::invalid_argument("d must be 1 or 2");
    if (!(delta > 0.5 * d && delta < 0.5 * (d + 1)))
        throw std::invalid_argument("delta must lie in (d/2, (d+1)/2)");
    if (!(delta - 0.5 * d < 2.0 * eta))
        throw std::invalid_argument("eta must satisfy delta - d/2 < 2*eta");
    double g = d == 1 ? 0.5 * delta : (delta + 2.0) / 6.0;
    if (std::abs(gamma - g) > 1e-12)
        throw std::invalid_argument("gamma must equal delta/2 (d=1) or (delta+2)/6 (d=2)");
    if (!(b > 0.25 * d && b < gamma))
        throw std::invalid_argument("b must lie in (d/4, gamma)");
    if (!(T >= 1.0 && T < T_max))
        throw std::invalid_argument("times must satisfy 1 <= T < T_max");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
}

double resonant_coefficient(const AngularFunction& nl) {
    return fourier_coefficients(nl, 4).coeff(1).real();
}

Trajectory construct_backward(const FinalData& fd, const AngularFunction& nl,
                              const TheoremParameters& p, int steps, int record_count,
                              const StepOptions& opts) {
    double cap = profile_time_cap(fd);
    if (p.T_max > cap)
        throw std::invalid_argument("T_max = " + std::to_string(p.T_max) +
                                    " exceeds the grid validity cap " + std::to_string(cap));
    const double g1 = resonant_coefficient(nl);
    Field u = build_profile(fd, p.T_max, g1);
    int stride = std::max(1, steps / std::max(1, record_count));
    Trajectory back = solve_interval(u, p.T_max, p.T, steps, nl, stride, opts);
    return back.reversed();
}

Field apply_R(const Grid& g, const std::vector<cplx>& freq_samples, double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("apply_R requires t >= 1");
    const Grid fgrid = g.frequency_domain();

    // (U(-1/4t) - 1) phi, spectrally in the frequency variable
    Field phi(fgrid, Side::Space, storage_to_natural(g, freq_samples));
    Field shifted = free_propagate(phi, -0.25 / t);
    shifted -= phi;

    // then M(t) D(t): evaluate at x/2t and multiply the quadratic phase
    TrigInterpolator interp(fgrid, shifted.values);
    std::vector<cplx> vals = interp.eval_scaled_lattice(g, 2.0 * t);

    const int n = g.points_per_dim;
    const int d = g.dim;
    const cplx pref = std::polar(std::pow(2.0 * t, -0.5 * d), -0.25 * M_PI * d);
    Field out(g, Side::Space);
    if (d == 1) {
        for (int j = 0; j < n; ++j)
            out.values[j] = pref * std::polar(1.0, g.coord(j) * g.coord(j) / (4.0 * t)) * vals[j];
    } else {
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                double r2 = g.coord(j1) * g.coord(j1) + g.coord(j2) * g.coord(j2);
                out.values[static_cast<std::size_t>(j1) * n + j2] =
                    pref * std::polar(1.0, r2 / (4.0 * t)) * vals[static_cast<std::size_t>(j1) * n + j2];
            }
    }
    return out;
}

Field apply_R_via_identity(const Grid& g, const std::vector<cplx>& freq_samples,
                           const std::function<cplx(const double*)>& phi_closed, double t) {
    if (!(t >= 1.0)) throw std::invalid_argument("apply_R requires t >= 1");
    // U(t) F^{-1} phi from the samples
    Field hat(g, Side::Frequency, freq_samples);
    Field left = free_propagate(to_space(hat), t);

    // minus M D phi from the closed form
    const int n = g.points_per_dim;
    const int d = g.dim;
    const cplx pref = std::polar(std::pow(2.0 * t, -0.5 * d), -0.25 * M_PI * d);
    const double inv2t = 1.0 / (2.0 * t);
    if (d == 1) {
        for (int j = 0; j < n; ++j) {
            double x = g.coord(j);
            double y = x * inv2t;
            left.values[j] -= pref * std::polar(1.0, x * x / (4.0 * t)) * phi_closed(&y);
        }
    } else {
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                double x1 = g.coord(j1), x2 = g.coord(j2);
                double y[2] = {x1 * inv2t, x2 * inv2t};
                left.values[static_cast<std::size_t>(j1) * n + j2] -=
                    pref * std::polar(1.0, (x1 * x1 + x2 * x2) / (4.0 * t)) * phi_closed(y);
            }
    }
    return left;
}

Field operator_R(const FinalData& fd, double t, double g1) {
    return apply_R(fd.grid(), hat_w(fd, t, g1).values, t);
}

std::vector<double> geometric_nodes(double T, double T_max, int count) {
    if (count < 2) throw std::invalid_argument("node count must be >= 2");
    if (!(T > 0.0 && T < T_max)) throw std::invalid_argument("need 0 < T < T_max");
    std::vector<double> t(count);
    double r = std::pow(T_max / T, 1.0 / (count - 1));
    t[0] = T;
    for (int i = 1; i < count - 1; ++i) t[i] = t[i - 1] * r;
    t[count - 1] = T_max;
    return t;
}

std::vector<Field> duhamel_suffix(const std::vector<double>& nodes,
                                  const std::vector<Field>& integrand) {
    const std::size_t K = nodes.size();
    if (integrand.size() != K) throw std::invalid_argument("node/integrand length mismatch");
    const Grid& g = integrand.front().grid;
    const int n = g.points_per_dim;
    const std::size_t sz = g.size();

    // f_k = F[U(-s_k) G(s_k)] = e^{+i s_k |xi|^2} F[G(s_k)]
    std::vector<std::vector<cplx>> f(K);
    std::vector<double> w2(sz);
    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) w2[k] = g.freq(k) * g.freq(k);
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2)
                w2[static_cast<std::size_t>(k1) * n + k2] =
                    g.freq(k1) * g.freq(k1) + g.freq(k2) * g.freq(k2);
    }
    for (std::size_t k = 0; k < K; ++k) {
        Field hat = to_frequency(integrand[k]);
        for (std::size_t i = 0; i < sz; ++i) hat.values[i] *= std::polar(1.0, nodes[k] * w2[i]);
        f[k] = std::move(hat.values);
    }

    // suffix trapezoid, then U(t_i) back to space
    std::vector<Field> out(K, Field(g, Side::Space));
    std::vector<cplx> suffix(sz, cplx(0.0));
    for (std::size_t k = K; k-- > 0;) {
        if (k + 1 < K) {
            double h = 0.5 * (nodes[k + 1] - nodes[k]);
            for (std::size_t i = 0; i < sz; ++i) suffix[i] += h * (f[k][i] + f[k + 1][i]);
        }
        Field hat(g, Side::Frequency, suffix);
        for (std::size_t i = 0; i < sz; ++i) hat.values[i] *= std::polar(1.0, -nodes[k] * w2[i]);
        out[k] = to_space(hat);
    }
    return out;
}

PicardOperator::PicardOperator(const FinalData& fd, const AngularFunction& nl,
                               const TheoremParameters& p, int node_count, int modes)
    : fd_(fd), nl_(nl), p_(p), nodes_(geometric_nodes(p.T, p.T_max, node_count)) {
    const double g1 = resonant_coefficient(nl_);
    const FourierSpectrum spec = fourier_coefficients(nl_, modes);
    const Grid& g = fd_.grid();
    const std::size_t K = nodes_.size();
    const int d = g.dim;
    const double q = 2.0 / d;

    for (double t : nodes_) profile_.push(t, build_profile(fd_, t, g1));

    // N(u_p) at the nodes
    std::vector<Field> nres(K, Field(g, Side::Space));
    for (std::size_t k = 0; k < K; ++k) {
        Field& f = nres[k];
        const Field& up = profile_.fields[k];
        for (std::size_t i = 0; i < f.values.size(); ++i)
            f.values[i] = eval_split(nl_, spec, up.values[i]).nonresonant;
    }
    std::vector<Field> I3 = duhamel_suffix(nodes_, nres);

    // R(s) G_1(w_hat)(s) / (2s) at the nodes; the identity route is exact for
    // closed-form data, the interpolating route otherwise
    std::vector<Field> rg(K, Field(g, Side::Space));
    std::vector<Field> rw;
    rw.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double t = nodes_[k];
        Field w = hat_w(fd_, t, g1);
        std::vector<cplx> gw(w.values.size());
        for (std::size_t i = 0; i < gw.size(); ++i)
            gw[i] = g1 * std::pow(std::abs(w.values[i]), q) * w.values[i];
        if (fd_.has_closed_form()) {
            auto w_eval = [this, g1, t, d](const double* xi) {
                cplx a = fd_.eval_hat(xi);
                return a * log_phase_factor(a, g1, t, d);
            };
            auto gw_eval = [w_eval, g1, q](const double* xi) {
                cplx a = w_eval(xi);
                return g1 * std::pow(std::abs(a), q) * a;
            };
            rw.push_back(apply_R_via_identity(g, w.values, w_eval, t));
            rg[k] = apply_R_via_identity(g, gw, gw_eval, t);
        } else {
            rw.push_back(apply_R(g, w.values, t));
            rg[k] = apply_R(g, gw, t);
        }
        rg[k] *= cplx(1.0 / (2.0 * t), 0.0);
    }
    std::vector<Field> I2 = duhamel_suffix(nodes_, rg);

    fixed_part_.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        Field f = profile_.fields[k];
        f += rw[k];
        f += cplx(0.0, -1.0) * I2[k];
        f += cplx(0.0, 1.0) * I3[k];
        fixed_part_.push_back(std::move(f));
    }
}

Trajectory PicardOperator::apply(const Trajectory& v) const {
    v.validate();
    const std::size_t K = nodes_.size();
    if (v.size() != K) throw std::invalid_argument("trajectory is not on the quadrature nodes");
    for (std::size_t k = 0; k < K; ++k)
        if (std::abs(v.times[k] - nodes_[k]) > 1e-9 * nodes_[k])
            throw std::invalid_argument("trajectory is not on the quadrature nodes");

    const Grid& g = fd_.grid();
    std::vector<Field> diff(K, Field(g, Side::Space));
    for (std::size_t k = 0; k < K; ++k) {
        const Field& vf = v.fields[k];
        const Field& up = profile_.fields[k];
        Field& f = diff[k];
        for (std::size_t i = 0; i < f.values.size(); ++i)
            f.values[i] = eval_F(nl_, vf.values[i]) - eval_F(nl_, up.values[i]);
    }
    std::vector<Field> I1 = duhamel_suffix(nodes_, diff);

    Trajectory out;
    for (std::size_t k = 0; k < K; ++k) {
        Field f = fixed_part_[k];
        f += cplx(0.0, 1.0) * I1[k];
        out.push(nodes_[k], std::move(f));
    }
    return out;
}

Trajectory picard_map(const Trajectory& v, const FinalData& fd, const AngularFunction& nl,
                      const TheoremParameters& p, int modes) {
    PicardOperator op(fd, nl, p, static_cast<int>(v.size()), modes);
    return op.apply(v);
}

namespace {

double xd_norm(const Field& f, int d) { return d == 1 ? f.norm_sup() : f.norm_l4(); }

}  // namespace

double weighted_norm_X(const Trajectory& v, const TheoremParameters& p) {
    v.validate();
    const std::size_t K = v.size();
    if (K == 0) return 0.0;

    double first = 0.0;
    std::vector<double> x4(K);
    for (std::size_t k = 0; k < K; ++k) {
        first = std::max(first, std::pow(v.times[k], p.b) * v.fields[k].norm_l2());
        double x = xd_norm(v.fields[k], p.d);
        x4[k] = x * x * x * x;
    }

    double second = 0.0, suffix = 0.0;
    for (std::size_t k = K; k-- > 0;) {
        if (k + 1 < K) suffix += 0.5 * (v.times[k + 1] - v.times[k]) * (x4[k] + x4[k + 1]);
        second = std::max(second, std::pow(v.times[k], p.b) * std::pow(suffix, 0.25));
    }
    return first + second;
}

double weighted_norm_tail_proxy(const Trajectory& v, const TheoremParameters& p) {
    if (v.size() == 0) return 0.0;
    return std::pow(v.times.back(), p.b) * xd_norm(v.fields.back(), p.d);
}

}  // namespace critnls
