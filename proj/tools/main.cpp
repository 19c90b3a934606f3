#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rydsim/config.hpp"
#include "rydsim/scenario.hpp"

namespace {

constexpr int exit_config_error = 2;
constexpr int exit_numerical_error = 3;
constexpr int exit_io_error = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::ios_base::failure("cannot read " + path);
    return buf.str();
}

void print_issues(const rydsim::ConfigError& err) {
    for (const auto& issue : err.issues()) std::cerr << "config error: " << issue << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superatom excitation simulator for trapped ultracold gases"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Suppress progress output");

    auto* run = app.add_subcommand("run", "Run a scenario from a JSON config");
    run->add_option("config", config_path, "Path to the JSON config")->required();
    run->add_option("--out", out_override, "Override the output directory");

    auto* validate = app.add_subcommand("validate", "Validate a JSON config and exit");
    validate->add_option("config", config_path, "Path to the JSON config")->required();

    auto* presets = app.add_subcommand("presets", "Print the default config for every scenario");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets->parsed()) {
            for (auto s : {rydsim::Scenario::Fig1, rydsim::Scenario::Fig2b,
                           rydsim::Scenario::Fig3, rydsim::Scenario::Scalings,
                           rydsim::Scenario::OracleSqrtN, rydsim::Scenario::OracleCrossover,
                           rydsim::Scenario::Curve}) {
                std::cout << "# " << rydsim::scenario_name(s) << "\n"
                          << rydsim::config_to_json(rydsim::default_config(s)) << "\n";
            }
            return 0;
        }

        std::string raw;
        try {
            raw = slurp(config_path);
        } catch (const std::ios_base::failure& e) {
            std::cerr << "i/o error: " << e.what() << "\n";
            return exit_io_error;
        }

        rydsim::ScenarioConfig config;
        try {
            config = rydsim::validate_config(raw);
        } catch (const rydsim::ConfigError& e) {
            print_issues(e);
            return exit_config_error;
        }
        for (const auto& w : config.warnings)
            if (!quiet) std::cerr << "warning: " << w << "\n";

        if (validate->parsed()) {
            if (!quiet) std::cout << "config ok: " << rydsim::scenario_name(config.scenario)
                                  << "\n";
            return 0;
        }

        if (!out_override.empty()) config.output_dir = out_override;
        if (!quiet)
            std::cout << "running " << rydsim::scenario_name(config.scenario) << " into "
                      << config.output_dir << "\n";

        rydsim::OutputBundle bundle;
        try {
            bundle = rydsim::run_scenario(config);
        } catch (const rydsim::ConfigError& e) {
            print_issues(e);
            return exit_config_error;
        } catch (const std::filesystem::filesystem_error& e) {
            std::cerr << "i/o error: " << e.what() << "\n";
            return exit_io_error;
        } catch (const std::ios_base::failure& e) {
            std::cerr << "i/o error: " << e.what() << "\n";
            return exit_io_error;
        } catch (const std::runtime_error& e) {
            std::cerr << "numerical error: " << e.what() << "\n";
            return exit_numerical_error;
        }

        if (!quiet) {
            for (const auto& p : bundle.csv_files) std::cout << "wrote " << p.string() << "\n";
            for (const auto& p : bundle.svg_files) std::cout << "wrote " << p.string() << "\n";
            std::cout << "wrote " << bundle.manifest.string() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical_error;
    }
}
