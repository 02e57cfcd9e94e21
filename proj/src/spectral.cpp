#include "critnls/spectral.hpp"

#include <cmath>

#include "critnls/fft.hpp"

namespace critnls {

void Trajectory::push(double t, Field f) {
    times.push_back(t);
    fields.push_back(std::move(f));
}

bool Trajectory::increasing() const {
    return times.size() < 2 || times.front() < times.back();
}

Trajectory Trajectory::reversed() const {
    Trajectory out;
    out.times.assign(times.rbegin(), times.rend());
    out.fields.assign(fields.rbegin(), fields.rend());
    return out;
}

void Trajectory::validate() const {
    if (times.size() != fields.size())
        throw std::invalid_argument("trajectory times/fields length mismatch");
    if (times.empty()) return;
    bool inc = increasing();
    for (std::size_t i = 1; i < times.size(); ++i) {
        bool ok = inc ? times[i] > times[i - 1] : times[i] < times[i - 1];
        if (!ok) throw std::invalid_argument("trajectory times must be strictly monotone");
    }
    for (const Field& f : fields) {
        if (f.side != Side::Space) throw std::invalid_argument("trajectory fields must be space-side");
        if (!(f.grid == fields.front().grid))
            throw std::invalid_argument("trajectory fields must share one grid");
    }
}

namespace {

// free half-step as a frequency multiplier, with optional 2/3 mask
void free_half_step(Field& u, double dt, bool dealias) {
    const Grid& g = u.grid;
    const int n = g.points_per_dim;
    const int cut = n / 3;
    Field hat = to_frequency(u);
    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) {
            double w = g.freq(k);
            hat.values[k] *= std::polar(1.0, -dt * w * w);
            if (dealias && std::abs(g.mode(k)) > cut) hat.values[k] = 0.0;
        }
    } else {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
                double w2 = g.freq(k1) * g.freq(k1) + g.freq(k2) * g.freq(k2);
                cplx& v = hat.values[static_cast<std::size_t>(k1) * n + k2];
                v *= std::polar(1.0, -dt * w2);
                if (dealias && (std::abs(g.mode(k1)) > cut || std::abs(g.mode(k2)) > cut))
                    v = 0.0;
            }
    }
    u = to_space(hat);
}

// pointwise nonlinear substep: i u' = F(u) over dt
void nonlinear_substep(Field& u, double dt, const AngularFunction& nl) {
    if (auto mu = nl.gauge_mu()) {
        // |u| is invariant under the gauge flow; the substep is an exact rotation
        const double q = 2.0 / nl.dimension();
        for (cplx& v : u.values)
            v *= std::polar(1.0, -*mu * std::pow(std::abs(v), q) * dt);
        return;
    }
    // classical RK4 on the scalar ODE u' = -i F(u), one step per grid point
    for (cplx& v : u.values) {
        const cplx k1 = cplx(0, -1) * eval_F(nl, v);
        const cplx k2 = cplx(0, -1) * eval_F(nl, v + 0.5 * dt * k1);
        const cplx k3 = cplx(0, -1) * eval_F(nl, v + 0.5 * dt * k2);
        const cplx k4 = cplx(0, -1) * eval_F(nl, v + dt * k3);
        v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

}  // namespace

Field step_strang(const Field& u, double dt, const AngularFunction& nl,
                  const StepOptions& opts) {
    if (dt == 0.0) throw std::invalid_argument("step_strang requires dt != 0");
    Field v = u;
    free_half_step(v, 0.5 * dt, opts.dealias);
    nonlinear_substep(v, dt, nl);
    free_half_step(v, 0.5 * dt, opts.dealias);
    return v;
}

Trajectory solve_interval(const Field& u0, double t0, double t1, int steps,
                          const AngularFunction& nl, int record_stride,
                          const StepOptions& opts) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (t0 == t1) throw std::invalid_argument("t0 and t1 must differ");
    if (record_stride < 1) record_stride = 1;

    const double dt = (t1 - t0) / steps;
    Trajectory traj;
    traj.push(t0, u0);
    Field u = u0;
    for (int k = 1; k <= steps; ++k) {
        u = step_strang(u, dt, nl, opts);
        if (!all_finite(u))
            throw IntegrationFailure("integration failure: non-finite values at step " +
                                     std::to_string(k) + " (t = " + std::to_string(t0 + k * dt) +
                                     ")");
        if (k % record_stride == 0 || k == steps) traj.push(t0 + k * dt, u);
    }
    return traj;
}

}  // namespace critnls
