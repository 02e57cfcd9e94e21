#include "critnls/experiments.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "critnls/analysis.hpp"
#include "critnls/io.hpp"
#include "critnls/presets.hpp"
#include "json.hpp"

namespace critnls {

namespace {

using nlohmann::json;

std::string timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json config_echo(const ExperimentConfig& c) {
    json j = json::object();
    std::istringstream in(c.canonical());
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('=');
        j[line.substr(0, pos)] = line.substr(pos + 1);
    }
    return j;
}

json base_report(const ExperimentConfig& c) {
    json j;
    j["experiment"] = to_string(c.experiment);
    j["preset"] = c.preset;
    j["config"] = config_echo(c);
    j["config_hash"] = c.hash();
    j["generated_at"] = timestamp();
    return j;
}

void write_report(const std::string& dir, const json& report) {
    std::ofstream out(dir + "/report.json");
    if (!out) throw std::runtime_error("cannot write report in '" + dir + "'");
    out << report.dump(2) << '\n';
}

json series_json(const std::vector<ErrorPoint>& s) {
    json j = json::array();
    for (const ErrorPoint& p : s) j.push_back({p.t, p.l2_error, p.xd_norm});
    return j;
}

TheoremParameters params_from(const ExperimentConfig& c) {
    double delta = c.delta == 0.0 ? TheoremParameters::default_delta(c.d) : c.delta;
    double b = c.b == 0.0 ? TheoremParameters::default_b(c.d) : c.b;
    return TheoremParameters::make(c.d, delta, b, c.eta, c.T, c.T_max, c.eps);
}

FinalData final_data_from(const ExperimentConfig& c, const Grid& g,
                          const TheoremParameters& p) {
    return final_data_preset(g, c.final_data, c.eps, c.sigma, c.bump_radius, c.bump_width,
                             p.delta);
}

json params_json(const TheoremParameters& p) {
    return {{"d", p.d},      {"delta", p.delta}, {"gamma", p.gamma}, {"b", p.b},
            {"eta", p.eta},  {"T", p.T},         {"T_max", p.T_max}, {"eps", p.eps}};
}

void run_classify(const ExperimentConfig& c, const std::string& dir) {
    AngularFunction nl = angular_preset(c.preset, c.d);
    FourierSpectrum spec = fourier_coefficients(nl, c.modes);
    ClassificationReport rep = check_assumption(spec, c.eta);

    json report = base_report(c);
    json r;
    r["g0"] = {rep.g0.real(), rep.g0.imag()};
    r["g1"] = {rep.g1.real(), rep.g1.imag()};
    r["g0_is_zero"] = rep.g0_is_zero;
    r["g1_is_real"] = rep.g1_is_real;
    r["eta_tested"] = rep.eta_tested;
    r["weighted_sum"] = rep.weighted_sum;
    r["partial_sum"] = rep.partial_sum;
    r["converges"] = rep.converges;
    r["range_type"] = to_string(rep.range_type);
    if (std::isfinite(spec.tail_exponent)) r["tail_exponent"] = spec.tail_exponent;
    else r["tail_exponent"] = std::isinf(spec.tail_exponent) ? "band-limited" : "inconclusive";
    if (!rep.diagnostic.empty()) r["diagnostic"] = rep.diagnostic;
    report["results"] = r;

    write_report(dir, report);
    write_spectrum_csv(dir + "/spectrum.csv", spec);
}

void run_scatter(const ExperimentConfig& c, const std::string& dir) {
    TheoremParameters p = params_from(c);
    Grid g(c.d, c.grid_points, c.box_length);
    AngularFunction nl = angular_preset(c.preset, c.d);
    FinalData fd = final_data_from(c, g, p);
    const double g1 = resonant_coefficient(nl);

    StepOptions opts;
    opts.dealias = c.dealias;
    Trajectory traj = construct_backward(fd, nl, p, c.steps, c.record, opts);

    std::vector<ErrorPoint> modified = error_series(traj, fd, g1);
    std::vector<ErrorPoint> unmodified = error_series(traj, fd, 0.0);

    Trajectory diff;
    for (std::size_t k = 0; k < traj.size(); ++k)
        diff.push(traj.times[k], traj.fields[k] - build_profile(fd, traj.times[k], g1));

    json report = base_report(c);
    json r;
    r["g1"] = g1;
    r["validity_cap"] = profile_time_cap(fd);
    r["series_modified"] = series_json(modified);
    r["series_unmodified"] = series_json(unmodified);
    FitResult fm = fit_decay(modified, 2.0 * p.T);
    FitResult fu = fit_decay(unmodified, 2.0 * p.T);
    r["fitted_exponent"] = fm.exponent;
    r["fitted_r_squared"] = fm.r_squared;
    r["fitted_exponent_unmodified"] = fu.exponent;
    r["weighted_norm"] = weighted_norm_X(diff, p);
    r["tail_proxy"] = weighted_norm_tail_proxy(diff, p);
    report["results"] = r;
    report["parameters"] = params_json(p);

    write_report(dir, report);
    write_series_csv(dir + "/series_modified.csv", modified);
    write_series_csv(dir + "/series_unmodified.csv", unmodified);
    if (c.export_fields) write_trajectory(dir + "/fields", traj, c.hash());
}

void run_picard(const ExperimentConfig& c, const std::string& dir) {
    TheoremParameters p = params_from(c);
    Grid g(c.d, c.grid_points, c.box_length);
    AngularFunction nl = angular_preset(c.preset, c.d);
    FinalData fd = final_data_from(c, g, p);

    PicardOperator op(fd, nl, p, c.nodes, c.modes);
    Trajectory v = op.profile_trajectory();
    std::vector<double> dists;
    for (int k = 0; k < c.picard_iterations; ++k) {
        Trajectory next = op.apply(v);
        double dk = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i)
            dk = std::max(dk, std::pow(next.times[i], p.b) *
                                  distance_l2(next.fields[i], v.fields[i]));
        dists.push_back(dk);
        v = std::move(next);
    }
    std::vector<double> ratios;
    for (std::size_t k = 1; k < dists.size(); ++k)
        ratios.push_back(dists[k - 1] > 0.0 ? dists[k] / dists[k - 1] : 0.0);

    Trajectory diff;
    for (std::size_t k = 0; k < v.size(); ++k)
        diff.push(v.times[k], v.fields[k] - op.profile_trajectory().fields[k]);

    json report = base_report(c);
    json r;
    r["picard_distances"] = dists;
    r["picard_ratios"] = ratios;
    r["weighted_norm"] = weighted_norm_X(diff, p);
    r["tail_proxy"] = weighted_norm_tail_proxy(diff, p);

    if (c.compare_backward) {
        StepOptions opts;
        opts.dealias = c.dealias;
        Trajectory back = construct_backward(fd, nl, p, c.steps, c.record, opts);
        double rel = distance_l2(v.fields.front(), back.fields.front()) /
                     back.fields.front().norm_l2();
        r["backward_consistency_rel_l2"] = rel;
    }
    report["results"] = r;
    report["parameters"] = params_json(p);
    write_report(dir, report);

    std::vector<ErrorPoint> series;
    for (std::size_t k = 0; k < diff.size(); ++k) {
        double xd = c.d == 1 ? diff.fields[k].norm_sup() : diff.fields[k].norm_l4();
        series.push_back({diff.times[k], diff.fields[k].norm_l2(), xd});
    }
    write_series_csv(dir + "/series_picard.csv", series);
}

void run_duhamel(const ExperimentConfig& c, const std::string& dir) {
    TheoremParameters p = params_from(c);
    Grid g(c.d, c.grid_points, c.box_length);
    AngularFunction nl = angular_preset(c.preset, c.d);
    FinalData fd = final_data_from(c, g, p);

    auto series = nonresonant_duhamel(fd, nl, p, c.nodes, c.modes);

    json report = base_report(c);
    json r;
    json js = json::array();
    for (const auto& [t, v] : series) js.push_back({t, v});
    r["series"] = js;
    double sup = 0.0;
    for (const auto& [t, v] : series) sup = std::max(sup, v);
    r["sup_norm"] = sup;
    if (sup > 0.0) {
        try {
            FitResult f = fit_decay(series, p.T_max / 10.0);
            r["fitted_exponent"] = f.exponent;
            r["fitted_r_squared"] = f.r_squared;
        } catch (const std::invalid_argument&) {
            r["fitted_exponent"] = nullptr;
        }
    }
    report["results"] = r;
    report["parameters"] = params_json(p);
    write_report(dir, report);
    write_series_csv(dir + "/series_duhamel.csv", series, "l2_norm");
}

void run_sweep(const ExperimentConfig& c, const std::string& dir) {
    std::vector<std::string> values;
    std::istringstream in(c.sweep_values);
    std::string tok;
    while (std::getline(in, tok, ',')) values.push_back(tok);
    if (values.empty()) throw std::invalid_argument("config key 'sweep_values' is empty");

    // validate every sub-run before any of them writes output
    std::vector<ExperimentConfig> subs;
    for (const std::string& v : values) {
        std::map<std::string, std::string> entries;
        std::istringstream cin(c.canonical());
        std::string line;
        while (std::getline(cin, line)) {
            auto pos = line.find('=');
            std::string key = line.substr(0, pos);
            if (key == "experiment" || key == "sweep_key" || key == "sweep_values") continue;
            entries[key] = line.substr(pos + 1);
        }
        entries[c.sweep_key] = v;
        subs.push_back(parse_config_entries(entries, ExperimentKind::Scatter));
    }

    std::mutex report_mutex;
    json runs = json::array();
    std::vector<std::thread> pool;
    std::size_t cursor = 0;
    std::mutex cursor_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(cursor_mutex);
                if (cursor >= subs.size() || first_error) return;
                i = cursor++;
            }
            try {
                std::string subdir = dir + "/run_" + c.sweep_key + "_" + values[i];
                std::filesystem::create_directories(subdir);
                run_scatter(subs[i], subdir);
                std::lock_guard<std::mutex> lock(report_mutex);
                runs.push_back({{"value", values[i]}, {"dir", subdir}});
            } catch (...) {
                std::lock_guard<std::mutex> lock(cursor_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    int nthreads = std::min<int>(c.threads, static_cast<int>(subs.size()));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    json report = base_report(c);
    report["results"] = {{"sweep_key", c.sweep_key}, {"runs", runs}};
    write_report(dir, report);
}

}  // namespace

std::string resolve_out_dir(const ExperimentConfig& c) {
    if (!c.out_dir.empty()) return c.out_dir;
    const char* root = std::getenv("CRITNLS_OUT_ROOT");
    std::string base = root ? root : "critnls_out";
    return base + "/" + to_string(c.experiment);
}

int run_experiment(const ExperimentConfig& c) {
    c.validate();
    std::string dir = resolve_out_dir(c);
    std::filesystem::create_directories(dir);
    switch (c.experiment) {
        case ExperimentKind::Classify: run_classify(c, dir); break;
        case ExperimentKind::Scatter: run_scatter(c, dir); break;
        case ExperimentKind::Picard: run_picard(c, dir); break;
        case ExperimentKind::Duhamel: run_duhamel(c, dir); break;
        case ExperimentKind::Sweep: run_sweep(c, dir); break;
    }
    return 0;
}

}  // namespace critnls
