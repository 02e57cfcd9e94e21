#include "critnls/analysis.hpp"

#include <cmath>

namespace critnls {

std::vector<ErrorPoint> error_series(const Trajectory& traj, const FinalData& fd, double g1) {
    traj.validate();
    std::vector<ErrorPoint> out;
    out.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        Field e = traj.fields[k] - build_profile(fd, traj.times[k], g1);
        double xd = fd.grid().dim == 1 ? e.norm_sup() : e.norm_l4();
        out.push_back({traj.times[k], e.norm_l2(), xd});
    }
    return out;
}

FitResult fit_decay(const std::vector<std::pair<double, double>>& series, double t_min) {
    std::vector<double> xs, ys;
    for (const auto& [t, v] : series) {
        if (t >= t_min && v > 0.0) {
            xs.push_back(std::log(t));
            ys.push_back(-std::log(v));
        }
    }
    if (xs.size() < 4)
        throw std::invalid_argument("fit_decay needs at least 4 points with t >= t_min and positive value");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double sxx_c = sxx - sx * sx / n;
    const double syy_c = syy - sy * sy / n;
    const double sxy_c = sxy - sx * sy / n;
    const double slope = sxy_c / sxx_c;

    FitResult r;
    r.exponent = slope;
    r.r_squared = syy_c > 0.0 ? (sxy_c * sxy_c) / (sxx_c * syy_c) : 1.0;
    r.points_used = static_cast<int>(xs.size());
    return r;
}

FitResult fit_decay(const std::vector<ErrorPoint>& series, double t_min) {
    std::vector<std::pair<double, double>> s;
    s.reserve(series.size());
    for (const ErrorPoint& p : series) s.emplace_back(p.t, p.l2_error);
    return fit_decay(s, t_min);
}

std::vector<std::pair<double, double>> nonresonant_duhamel(const FinalData& fd,
                                                           const AngularFunction& nl,
                                                           const TheoremParameters& p,
                                                           int node_count, int modes) {
    if (modes < 32) throw std::invalid_argument("nonresonant_duhamel requires modes >= 32");
    const double g1 = resonant_coefficient(nl);
    const FourierSpectrum spec = fourier_coefficients(nl, modes);
    const std::vector<double> nodes = geometric_nodes(p.T, p.T_max, node_count);
    const Grid& g = fd.grid();

    std::vector<Field> integrand(nodes.size(), Field(g, Side::Space));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Field up = build_profile(fd, nodes[k], g1);
        Field& f = integrand[k];
        for (std::size_t i = 0; i < f.values.size(); ++i)
            f.values[i] = eval_split(nl, spec, up.values[i]).nonresonant;
    }
    std::vector<Field> I = duhamel_suffix(nodes, integrand);

    std::vector<std::pair<double, double>> out;
    out.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) out.emplace_back(nodes[k], I[k].norm_l2());
    return out;
}

}  // namespace critnls
