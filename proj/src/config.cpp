#include "critnls/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "critnls/finalstate.hpp"
#include "critnls/io.hpp"
#include "json.hpp"

namespace critnls {

ExperimentKind experiment_from_name(const std::string& name) {
    if (name == "classify") return ExperimentKind::Classify;
    if (name == "scatter") return ExperimentKind::Scatter;
    if (name == "picard") return ExperimentKind::Picard;
    if (name == "duhamel") return ExperimentKind::Duhamel;
    if (name == "sweep") return ExperimentKind::Sweep;
    throw std::invalid_argument("unknown experiment '" + name +
                                "' (expected classify|scatter|picard|duhamel|sweep)");
}

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Classify: return "classify";
        case ExperimentKind::Scatter: return "scatter";
        case ExperimentKind::Picard: return "picard";
        case ExperimentKind::Duhamel: return "duhamel";
        default: return "sweep";
    }
}

namespace {

int to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw std::invalid_argument("config key '" + key + "': '" + v + "' is not an integer");
    }
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw std::invalid_argument("config key '" + key + "': '" + v + "' is not a number");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("config key '" + key + "': '" + v + "' is not a boolean");
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig parse_config_entries(const std::map<std::string, std::string>& entries,
                                      ExperimentKind experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    for (const auto& [key, v] : entries) {
        if (key == "experiment") {
            ExperimentKind k = experiment_from_name(v);
            if (k != experiment)
                throw std::invalid_argument("config experiment '" + v +
                                            "' does not match requested '" +
                                            to_string(experiment) + "'");
        } else if (key == "preset") c.preset = v;
        else if (key == "d") c.d = to_int(key, v);
        else if (key == "grid_points") c.grid_points = to_int(key, v);
        else if (key == "box_length") c.box_length = to_double(key, v);
        else if (key == "final_data") c.final_data = v;
        else if (key == "sigma") c.sigma = to_double(key, v);
        else if (key == "bump_radius") c.bump_radius = to_double(key, v);
        else if (key == "bump_width") c.bump_width = to_double(key, v);
        else if (key == "delta") c.delta = to_double(key, v);
        else if (key == "b") c.b = to_double(key, v);
        else if (key == "eta") c.eta = to_double(key, v);
        else if (key == "T") c.T = to_double(key, v);
        else if (key == "T_max") c.T_max = to_double(key, v);
        else if (key == "eps") c.eps = to_double(key, v);
        else if (key == "steps") c.steps = to_int(key, v);
        else if (key == "modes") c.modes = to_int(key, v);
        else if (key == "nodes") c.nodes = to_int(key, v);
        else if (key == "record") c.record = to_int(key, v);
        else if (key == "picard_iterations") c.picard_iterations = to_int(key, v);
        else if (key == "seed") c.seed = static_cast<unsigned>(to_int(key, v));
        else if (key == "dealias") c.dealias = to_bool(key, v);
        else if (key == "compare_backward") c.compare_backward = to_bool(key, v);
        else if (key == "export_fields") c.export_fields = to_bool(key, v);
        else if (key == "sweep_key") c.sweep_key = v;
        else if (key == "sweep_values") c.sweep_values = v;
        else if (key == "threads") c.threads = to_int(key, v);
        else if (key == "out") c.out_dir = v;
        else throw std::invalid_argument("unknown config key '" + key + "'");
    }
    c.validate();
    return c;
}

void ExperimentConfig::validate() const {
    if (d != 1 && d != 2) throw std::invalid_argument("config key 'd' must be 1 or 2");
    if (grid_points < 16 || (grid_points & (grid_points - 1)) != 0)
        throw std::invalid_argument("config key 'grid_points' must be a power of two >= 16");
    if (!(box_length > 0.0)) throw std::invalid_argument("config key 'box_length' must be positive");
    if (final_data != "gaussian" && final_data != "bump")
        throw std::invalid_argument("config key 'final_data' must be gaussian or bump");
    if (!(sigma > 0.0)) throw std::invalid_argument("config key 'sigma' must be positive");
    if (!(bump_width > 0.0)) throw std::invalid_argument("config key 'bump_width' must be positive");
    if (bump_radius < 0.0) throw std::invalid_argument("config key 'bump_radius' must be >= 0");
    if (steps < 1) throw std::invalid_argument("config key 'steps' must be >= 1");
    if (modes < 1) throw std::invalid_argument("config key 'modes' must be >= 1");
    if (nodes < 2) throw std::invalid_argument("config key 'nodes' must be >= 2");
    if (record < 1) throw std::invalid_argument("config key 'record' must be >= 1");
    if (picard_iterations < 1)
        throw std::invalid_argument("config key 'picard_iterations' must be >= 1");
    if (threads < 1) throw std::invalid_argument("config key 'threads' must be >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("config key 'eps' must be positive");

    // the scattering experiments re-check the full parameter set, with the
    // dimension defaults filled in; surface those violations at parse time
    if (experiment != ExperimentKind::Classify) {
        double dl = delta == 0.0 ? TheoremParameters::default_delta(d) : delta;
        double bb = b == 0.0 ? TheoremParameters::default_b(d) : b;
        TheoremParameters::make(d, dl, bb, eta, T, T_max, eps);
    } else if (!(eta > 0.0)) {
        throw std::invalid_argument("config key 'eta' must be positive");
    }
    if (experiment == ExperimentKind::Sweep) {
        if (sweep_key.empty()) throw std::invalid_argument("config key 'sweep_key' is required for sweep");
        if (sweep_values.empty())
            throw std::invalid_argument("config key 'sweep_values' is required for sweep");
    }
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream out;
    out << "T=" << format_double(T) << '\n'
        << "T_max=" << format_double(T_max) << '\n'
        << "b=" << format_double(b) << '\n'
        << "box_length=" << format_double(box_length) << '\n'
        << "bump_radius=" << format_double(bump_radius) << '\n'
        << "bump_width=" << format_double(bump_width) << '\n'
        << "compare_backward=" << (compare_backward ? "true" : "false") << '\n'
        << "d=" << d << '\n'
        << "dealias=" << (dealias ? "true" : "false") << '\n'
        << "delta=" << format_double(delta) << '\n'
        << "eps=" << format_double(eps) << '\n'
        << "eta=" << format_double(eta) << '\n'
        << "experiment=" << to_string(experiment) << '\n'
        << "export_fields=" << (export_fields ? "true" : "false") << '\n'
        << "final_data=" << final_data << '\n'
        << "grid_points=" << grid_points << '\n'
        << "modes=" << modes << '\n'
        << "nodes=" << nodes << '\n'
        << "picard_iterations=" << picard_iterations << '\n'
        << "preset=" << preset << '\n'
        << "record=" << record << '\n'
        << "seed=" << seed << '\n'
        << "sigma=" << format_double(sigma) << '\n'
        << "steps=" << steps << '\n'
        << "sweep_key=" << sweep_key << '\n'
        << "sweep_values=" << sweep_values << '\n'
        << "threads=" << threads << '\n';
    return out.str();
}

std::string ExperimentConfig::hash() const {
    // FNV-1a over the canonical form
    std::string s = canonical();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

ExperimentConfig parse_config_file(const std::string& path, ExperimentKind experiment,
                                   const std::map<std::string, std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");

    std::map<std::string, std::string> entries;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::invalid_argument("malformed JSON config: " + std::string(e.what()));
        }
        if (!j.is_object()) throw std::invalid_argument("JSON config must be an object");
        for (auto& [key, v] : j.items()) {
            if (v.is_string()) entries[key] = v.get<std::string>();
            else if (v.is_boolean()) entries[key] = v.get<bool>() ? "true" : "false";
            else if (v.is_number_integer()) entries[key] = std::to_string(v.get<long long>());
            else if (v.is_number()) entries[key] = format_double(v.get<double>());
            else throw std::invalid_argument("config key '" + key + "' has unsupported JSON type");
        }
    } else {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = trim(line);
            if (s.empty() || s[0] == '#') continue;
            auto pos = s.find('=');
            if (pos == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            " is not key=value: '" + s + "'");
            entries[trim(s.substr(0, pos))] = trim(s.substr(pos + 1));
        }
    }
    for (const auto& [k, v] : overrides) entries[k] = v;
    return parse_config_entries(entries, experiment);
}

}  // namespace critnls
