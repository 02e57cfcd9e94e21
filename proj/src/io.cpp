#include "critnls/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace critnls {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

nlohmann::json grid_json(const Grid& g, Side side) {
    return {{"d", g.dim},
            {"points_per_dim", g.points_per_dim},
            {"box_length", g.box_length},
            {"side", side == Side::Space ? "space" : "frequency"}};
}

}  // namespace

void write_spectrum_csv(const std::string& path, const FourierSpectrum& spec) {
    std::ofstream out = open_out(path);
    out << "n,re,im\n";
    for (int n = -spec.truncation_order; n <= spec.truncation_order; ++n) {
        cplx c = spec.coeff(n);
        out << n << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
    }
}

void write_series_csv(const std::string& path, const std::vector<ErrorPoint>& series) {
    std::ofstream out = open_out(path);
    out << "t,l2_error,xd_norm\n";
    for (const ErrorPoint& p : series)
        out << format_double(p.t) << ',' << format_double(p.l2_error) << ','
            << format_double(p.xd_norm) << '\n';
}

void write_series_csv(const std::string& path,
                      const std::vector<std::pair<double, double>>& series,
                      const std::string& value_name) {
    std::ofstream out = open_out(path);
    out << "t," << value_name << '\n';
    for (const auto& [t, v] : series)
        out << format_double(t) << ',' << format_double(v) << '\n';
}

void write_field_csv(const std::string& path, const Field& f) {
    std::ofstream out = open_out(path);
    out << "# " << grid_json(f.grid, f.side).dump() << '\n';
    const int n = f.grid.points_per_dim;
    if (f.grid.dim == 1) {
        out << "j,re,im\n";
        for (int j = 0; j < n; ++j)
            out << j << ',' << format_double(f.values[j].real()) << ','
                << format_double(f.values[j].imag()) << '\n';
    } else {
        out << "j1,j2,re,im\n";
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                const cplx& v = f.values[static_cast<std::size_t>(j1) * n + j2];
                out << j1 << ',' << j2 << ',' << format_double(v.real()) << ','
                    << format_double(v.imag()) << '\n';
            }
    }
}

void write_trajectory(const std::string& dir, const Trajectory& traj,
                      const std::string& config_hash) {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest;
    manifest["config_hash"] = config_hash;
    manifest["times"] = traj.times;
    if (!traj.fields.empty())
        manifest["grid"] = grid_json(traj.fields.front().grid, Side::Space);
    std::vector<std::string> files;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "field_%04zu.csv", k);
        files.push_back(name);
        write_field_csv(dir + "/" + name, traj.fields[k]);
    }
    manifest["files"] = files;
    std::ofstream out = open_out(dir + "/manifest.json");
    out << manifest.dump(2) << '\n';
}

}  // namespace critnls
