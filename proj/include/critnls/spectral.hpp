#pragma once

#include "critnls/grid.hpp"
#include "critnls/nonlinearity.hpp"

namespace critnls {

/// Time-indexed sequence of space-side fields on one grid.
/// Times are strictly monotone (either direction for raw integrator output);
/// reversed() flips to the other order.
struct Trajectory {
    std::vector<double> times;
    std::vector<Field> fields;

    void push(double t, Field f);
    std::size_t size() const { return times.size(); }
    bool increasing() const;
    Trajectory reversed() const;
    void validate() const;
};

struct StepOptions {
    bool dealias = false;  // 2/3-rule mask applied in the free substeps
};

struct IntegrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One Strang step for i u_t + Laplacian u = F(u): half free step, nonlinear
// substep over dt (exact phase rotation for the pure gauge preset, pointwise
// RK4 otherwise), half free step. Negative dt steps backward.
Field step_strang(const Field& u, double dt, const AngularFunction& nl,
                  const StepOptions& opts = {});

// Repeated Strang steps with dt = (t1-t0)/steps, recording the initial field
// and then every record_stride-th step (the final step always). Non-finite
// values raise IntegrationFailure naming the first bad step.
Trajectory solve_interval(const Field& u0, double t0, double t1, int steps,
                          const AngularFunction& nl, int record_stride = 1,
                          const StepOptions& opts = {});

}  // namespace critnls
