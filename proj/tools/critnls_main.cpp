#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "critnls/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"critnls: numerical laboratory for critical homogeneous NLS scattering"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;

    const std::vector<std::string> names = {"classify", "scatter", "picard", "duhamel", "sweep"};
    const std::vector<std::string> descriptions = {
        "Fourier coefficients and long/short-range classification of a preset",
        "backward final-state construction and profile error series",
        "fixed-point iteration of the final-state integral equation",
        "decay of the non-resonant Duhamel term",
        "fan a scatter run over a list of values for one config key"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_option("--config", config_path, "config file (key=value, or .json)")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--override", overrides, "config overrides, key=value");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        std::string experiment = app.get_subcommands().front()->get_name();
        std::map<std::string, std::string> extra;
        for (const std::string& o : overrides) {
            auto pos = o.find('=');
            if (pos == std::string::npos) {
                std::cerr << "error: --override expects key=value, got '" << o << "'\n";
                return 2;
            }
            extra[o.substr(0, pos)] = o.substr(pos + 1);
        }
        if (!out_dir.empty()) extra["out"] = out_dir;
        critnls::ExperimentConfig config = critnls::parse_config_file(
            config_path, critnls::experiment_from_name(experiment), extra);
        return critnls::run_experiment(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
