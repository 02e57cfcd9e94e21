#include "critnls/profile.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include "critnls/fft.hpp"
#include "critnls/interp.hpp"

namespace critnls {

namespace {

void check_delta(int d, double delta) {
    if (!(delta > 0.5 * d && delta < 0.5 * (d + 1)))
        throw std::invalid_argument("delta must lie in (d/2, (d+1)/2)");
}

// (2it)^{-d/2} on the principal branch, t > 0
cplx dilation_prefactor(double t, int d) {
    return std::polar(std::pow(2.0 * t, -0.5 * d), -0.25 * M_PI * d);
}

}  // namespace

FinalData::FinalData(const Grid& g, std::vector<cplx> hat_samples, double delta)
    : grid_(g), hat_(g, Side::Frequency, std::move(hat_samples)), delta_(delta) {
    check_delta(g.dim, delta);
    compute_norms();
}

FinalData::FinalData(const Grid& g, Evaluator hat_closed, double delta)
    : grid_(g), hat_(g, Side::Frequency), closed_(std::move(hat_closed)), delta_(delta) {
    check_delta(g.dim, delta);
    if (!closed_) throw std::invalid_argument("closed-form evaluator must be callable");
    const int n = g.points_per_dim;
    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) {
            double xi = g.freq(k);
            hat_.values[k] = closed_(&xi);
        }
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
                double xi[2] = {g.freq(k1), g.freq(k2)};
                hat_.values[static_cast<std::size_t>(k1) * n + k2] = closed_(xi);
            }
    }
    compute_norms();
}

void FinalData::compute_norms() {
    sup_norm_ = hat_.norm_sup();

    const int n = grid_.points_per_dim;
    const int d = grid_.dim;

    // ||<x>^d u_plus||_2 from the inverse transform
    Field u = to_space(hat_);
    double s = 0.0;
    if (d == 1) {
        for (int j = 0; j < n; ++j) {
            double x = grid_.coord(j);
            s += std::pow(1.0 + x * x, d) * std::norm(u.values[j]);
        }
    } else {
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                double r2 = grid_.coord(j1) * grid_.coord(j1) +
                            grid_.coord(j2) * grid_.coord(j2);
                s += std::pow(1.0 + r2, d) * std::norm(u.values[static_cast<std::size_t>(j1) * n + j2]);
            }
    }
    h0d_norm_ = std::sqrt(s * u.cell_measure());

    // |||xi|^{-delta} u_plus_hat||_2 with the zero mode dropped
    s = 0.0;
    if (d == 1) {
        for (int k = 0; k < n; ++k) {
            if (grid_.mode(k) == 0) continue;
            s += std::pow(std::abs(grid_.freq(k)), -2.0 * delta_) * std::norm(hat_.values[k]);
        }
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
                if (grid_.mode(k1) == 0 && grid_.mode(k2) == 0) continue;
                double r2 = grid_.freq(k1) * grid_.freq(k1) + grid_.freq(k2) * grid_.freq(k2);
                s += std::pow(r2, -delta_) * std::norm(hat_.values[static_cast<std::size_t>(k1) * n + k2]);
            }
    }
    hneg_norm_ = std::sqrt(s * hat_.cell_measure());
}

double FinalData::support_radius(double rel_tol) const {
    const double cut = rel_tol * sup_norm_;
    const int n = grid_.points_per_dim;
    double r = 0.0;
    if (grid_.dim == 1) {
        for (int k = 0; k < n; ++k)
            if (std::abs(hat_.values[k]) > cut) r = std::max(r, std::abs(grid_.freq(k)));
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2)
                if (std::abs(hat_.values[static_cast<std::size_t>(k1) * n + k2]) > cut)
                    r = std::max(r, std::max(std::abs(grid_.freq(k1)), std::abs(grid_.freq(k2))));
    }
    return r;
}

cplx log_phase_factor(cplx u_hat, double g1, double t, int d) {
    return std::polar(1.0, -0.5 * g1 * std::pow(std::abs(u_hat), 2.0 / d) * std::log(t));
}

Field hat_w(const FinalData& fd, double t, double g1) {
    if (!(t >= 1.0)) throw std::invalid_argument("hat_w requires t >= 1");
    Field w = fd.u_plus_hat();
    const int d = fd.grid().dim;
    for (cplx& v : w.values) v *= log_phase_factor(v, g1, t, d);
    return w;
}

Field build_profile(const FinalData& fd, double t, double g1) {
    if (!(t >= 1.0)) throw std::invalid_argument("build_profile requires t >= 1");
    const Grid& g = fd.grid();
    const int n = g.points_per_dim;
    const int d = g.dim;
    const cplx pref = dilation_prefactor(t, d);
    const double inv2t = 1.0 / (2.0 * t);

    Field out(g, Side::Space);

    if (fd.has_closed_form()) {
        if (d == 1) {
            for (int j = 0; j < n; ++j) {
                double x = g.coord(j);
                double y = x * inv2t;
                cplx a = fd.eval_hat(&y);
                out.values[j] = pref * std::polar(1.0, x * x / (4.0 * t)) * a *
                                log_phase_factor(a, g1, t, d);
            }
        } else {
            for (int j1 = 0; j1 < n; ++j1) {
                double x1 = g.coord(j1);
                for (int j2 = 0; j2 < n; ++j2) {
                    double x2 = g.coord(j2);
                    double y[2] = {x1 * inv2t, x2 * inv2t};
                    cplx a = fd.eval_hat(y);
                    out.values[static_cast<std::size_t>(j1) * n + j2] =
                        pref * std::polar(1.0, (x1 * x1 + x2 * x2) / (4.0 * t)) * a *
                        log_phase_factor(a, g1, t, d);
                }
            }
        }
        return out;
    }

    // sampled data: interpolate w_hat(t) on the frequency lattice
    Field w = hat_w(fd, t, g1);
    const Grid fgrid = g.frequency_domain();

    std::size_t outside = 0;
    const double half = 0.5 * fgrid.box_length;
    for (int j = 0; j < n; ++j)
        if (std::abs(g.coord(j) * inv2t) > half) ++outside;
    double frac = static_cast<double>(outside) / n;  // per-axis fraction
    if (frac > 0.01) {
        // only worth a warning if there is amplitude near the band edge that
        // an off-band evaluation would miss
        double edge = 0.0;
        for (int k = 0; k < n; ++k) {
            if (std::abs(g.mode(k)) >= n / 2 - 1) {
                if (d == 1) {
                    edge = std::max(edge, std::abs(w.values[k]));
                } else {
                    for (int k2 = 0; k2 < n; ++k2)
                        edge = std::max(edge,
                                        std::max(std::abs(w.values[static_cast<std::size_t>(k) * n + k2]),
                                                 std::abs(w.values[static_cast<std::size_t>(k2) * n + k])));
                }
            }
        }
        if (edge > 1e-10 * fd.sup_norm())
            std::cerr << "critnls: build_profile: " << 100.0 * frac
                      << "% of spatial points map outside the frequency band at t=" << t
                      << "\n";
    }

    TrigInterpolator interp(fgrid, storage_to_natural(g, w.values));
    std::vector<cplx> vals = interp.eval_scaled_lattice(g, 2.0 * t);
    if (d == 1) {
        for (int j = 0; j < n; ++j) {
            double x = g.coord(j);
            out.values[j] = pref * std::polar(1.0, x * x / (4.0 * t)) * vals[j];
        }
    } else {
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                double x1 = g.coord(j1), x2 = g.coord(j2);
                out.values[static_cast<std::size_t>(j1) * n + j2] =
                    pref * std::polar(1.0, (x1 * x1 + x2 * x2) / (4.0 * t)) *
                    vals[static_cast<std::size_t>(j1) * n + j2];
            }
    }
    return out;
}

Field free_propagate(const Field& f, double t) {
    if (f.side == Side::Frequency) {
        Field out = f;
        const Grid& g = f.grid;
        const int n = g.points_per_dim;
        if (g.dim == 1) {
            for (int k = 0; k < n; ++k)
                out.values[k] *= std::polar(1.0, -t * g.freq(k) * g.freq(k));
        } else {
            for (int k1 = 0; k1 < n; ++k1)
                for (int k2 = 0; k2 < n; ++k2) {
                    double w2 = g.freq(k1) * g.freq(k1) + g.freq(k2) * g.freq(k2);
                    out.values[static_cast<std::size_t>(k1) * n + k2] *= std::polar(1.0, -t * w2);
                }
        }
        return out;
    }
    Field hat = to_frequency(f);
    hat = free_propagate(hat, t);
    return to_space(hat);
}

double profile_time_cap(const FinalData& fd, double safety, double rel_tol) {
    double r = fd.support_radius(rel_tol);
    if (r == 0.0) return std::numeric_limits<double>::infinity();
    return safety * 0.5 * fd.grid().box_length / (2.0 * r);
}

}  // namespace critnls
