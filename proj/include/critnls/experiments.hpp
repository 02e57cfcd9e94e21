#pragma once

#include "critnls/config.hpp"

namespace critnls {

// Executes the configured experiment and writes report.json plus the
// experiment's CSV outputs under the output directory. Returns the process
// exit status (0 on success). Validation failures throw before anything is
// written.
int run_experiment(const ExperimentConfig& config);

// output directory resolution: config out_dir, else $CRITNLS_OUT_ROOT/<kind>,
// else ./critnls_out/<kind>
std::string resolve_out_dir(const ExperimentConfig& config);

}  // namespace critnls
