#ifndef RYDSIM_CONFIG_HPP
#define RYDSIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rydsim/excitation.hpp"
#include "rydsim/gas_model.hpp"
#include "rydsim/superatom_model.hpp"

namespace rydsim {

enum class Scenario {
    Fig1,
    Fig2b,
    Fig3,
    Scalings,
    OracleSqrtN,
    OracleCrossover,
    Curve,
};

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name); // throws on unknown name

// Fully resolved run configuration. Frequencies are stored as angular
// frequencies; the JSON surface accepts plain Hz and converts on ingest.
struct ScenarioConfig {
    Scenario scenario = Scenario::Fig2b;
    std::uint64_t seed = 1;
    std::string output_dir = "out";

    TrapConfig trap;         // default preset, omega_bar ~ 2 pi x 210 Hz
    AtomSchedule schedule;   // evaporation-ramp atom numbers
    LaserParams lasers;
    BlockadeParams blockade; // omega_0 resolved from lasers / rabi_reduction
    bool clip_to_gas = false;

    std::vector<double> temperatures; // K, ascending
    std::vector<double> durations;    // s

    // curve scenario
    double curve_temperature = 0.0; // 0 = lowest sweep temperature
    int curve_points = 200;
    double curve_tau_factor = 3.0;  // curve extends to this multiple of tau_s

    // oracle scenarios
    int oracle_n_min = 2;
    int oracle_n_max = 8;
    int oracle_samples = 1024;
    int crossover_points = 17;

    std::vector<std::string> warnings; // non-fatal validation notes
};

// All violations found while validating a config document, reported together.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

ScenarioConfig default_config(Scenario scenario = Scenario::Fig2b);

// Strict parse of a JSON config document: unknown keys, duplicate keys, and
// out-of-range values are all errors; every violation is reported.
ScenarioConfig validate_config(const std::string& raw_text);

// Resolved config back to a JSON document (the `presets` output and the
// run-manifest body). Round-trips through validate_config.
std::string config_to_json(const ScenarioConfig& config);

} // namespace rydsim

#endif
