#pragma once

#include <map>
#include <string>

namespace critnls {

enum class ExperimentKind { Classify, Scatter, Picard, Duhamel, Sweep };

ExperimentKind experiment_from_name(const std::string& name);
std::string to_string(ExperimentKind k);

/// Validated experiment configuration. Parsed from flat key=value text or
/// JSON; unknown keys are rejected, constraint violations name the key.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Classify;
    std::string preset = "gauge1";
    int d = 1;

    int grid_points = 256;
    double box_length = 64.0;

    std::string final_data = "gaussian";
    double sigma = 1.0;          // gaussian width
    double bump_radius = 0.5;    // bump plateau radius
    double bump_width = 0.5;     // bump edge thickness

    double delta = 0.0;          // 0 = dimension default
    double b = 0.0;              // 0 = dimension default
    double eta = 0.5;
    double T = 1.0;
    double T_max = 2.0;
    double eps = 0.1;

    int steps = 1000;
    int modes = 64;              // spectrum truncation N
    int nodes = 64;              // quadrature node count
    int record = 128;            // recorded times per trajectory
    int picard_iterations = 8;
    unsigned seed = 1;
    bool dealias = false;
    bool compare_backward = true;  // picard: also run the backward construction
    bool export_fields = false;    // scatter: write the trajectory CSVs

    std::string sweep_key;       // sweep: overridden key
    std::string sweep_values;    // comma-separated values
    int threads = 2;

    std::string out_dir;

    // canonical key=value form (sorted keys; excludes out_dir)
    std::string canonical() const;
    std::string hash() const;

    void validate() const;
};

// parse from file (.json by extension, key=value otherwise), then apply
// key=value overrides
ExperimentConfig parse_config_file(const std::string& path, ExperimentKind experiment,
                                   const std::map<std::string, std::string>& overrides);
ExperimentConfig parse_config_entries(const std::map<std::string, std::string>& entries,
                                      ExperimentKind experiment);

}  // namespace critnls
