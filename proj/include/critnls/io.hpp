#pragma once

#include <string>
#include <utility>
#include <vector>

#include "critnls/analysis.hpp"
#include "critnls/nonlinearity.hpp"

namespace critnls {

// fixed-precision decimal formatting shared by every writer, so identical
// runs produce identical bytes
std::string format_double(double v);

void write_spectrum_csv(const std::string& path, const FourierSpectrum& spec);
void write_series_csv(const std::string& path, const std::vector<ErrorPoint>& series);
void write_series_csv(const std::string& path,
                      const std::vector<std::pair<double, double>>& series,
                      const std::string& value_name);

// field CSV with a JSON grid-metadata header line
void write_field_csv(const std::string& path, const Field& f);

// one CSV per recorded time plus a manifest (times, grid, config hash)
void write_trajectory(const std::string& dir, const Trajectory& traj,
                      const std::string& config_hash);

}  // namespace critnls
