#include "rydsim/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rydsim {

using nlohmann::json;
using namespace constants;

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Fig1: return "fig1";
        case Scenario::Fig2b: return "fig2b";
        case Scenario::Fig3: return "fig3";
        case Scenario::Scalings: return "scalings";
        case Scenario::OracleSqrtN: return "oracle-sqrtN";
        case Scenario::OracleCrossover: return "oracle-crossover";
        case Scenario::Curve: return "curve";
    }
    return "unknown";
}

Scenario scenario_from_name(const std::string& name) {
    for (Scenario s : {Scenario::Fig1, Scenario::Fig2b, Scenario::Fig3, Scenario::Scalings,
                       Scenario::OracleSqrtN, Scenario::OracleCrossover, Scenario::Curve})
        if (scenario_name(s) == name) return s;
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error(issues.empty() ? "invalid config"
                                        : "invalid config: " + issues.front() +
                                              (issues.size() > 1 ? " (and more)" : "")),
      issues_(std::move(issues)) {}

ScenarioConfig default_config(Scenario scenario) {
    ScenarioConfig c;
    c.scenario = scenario;

    // Evaporation ramp: 1e7 atoms at 5 uK down to 1e5 at 200 nK, with the
    // steep stretch around condensation that the density observations imply.
    // The middle anchors place the in-sweep condensation crossing at ~700 nK,
    // where the ramp passes through the static trap preset (N = 4e5,
    // T_c ~ 697 nK).
    c.schedule.table = {{200e-9, 1.0e5}, {500e-9, 2.1e5}, {950e-9, 7.3e5}, {5e-6, 1.0e7}};

    c.blockade = BlockadeParams::from_lasers(c.lasers, c.blockade);

    c.temperatures.reserve(30);
    for (int i = 0; i < 30; ++i)
        c.temperatures.push_back(200e-9 * std::pow(5e-6 / 200e-9, i / 29.0));

    c.durations = {170e-9, 320e-9, 370e-9, 1970e-9};
    return c;
}

namespace {

// SAX walker that rejects duplicate object keys, which the DOM parser would
// silently collapse.
class DuplicateKeyCheck : public json::json_sax_t {
public:
    std::vector<std::string> issues;

    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t) override { return true; }
    bool number_unsigned(number_unsigned_t) override { return true; }
    bool number_float(number_float_t, const string_t&) override { return true; }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_object(std::size_t) override {
        stack_.emplace_back();
        return true;
    }
    bool key(string_t& k) override {
        if (!stack_.back().insert(k).second)
            issues.push_back("duplicate key '" + k + "'");
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override { return true; }
    bool end_array() override { return true; }
    bool parse_error(std::size_t, const std::string&, const json::exception& ex) override {
        issues.push_back(ex.what());
        return false;
    }

private:
    std::vector<std::set<std::string>> stack_;
};

class Reader {
public:
    std::vector<std::string> issues;

    void unknown_keys(const json& obj, const std::string& where,
                      const std::set<std::string>& allowed) {
        for (const auto& [k, v] : obj.items())
            if (!allowed.count(k))
                issues.push_back(where + ": unknown key '" + k + "'");
    }

    // Fetch a finite number, optionally bounded below (strictly).
    bool number(const json& obj, const std::string& where, const std::string& key,
                double& out, bool require_positive = false) {
        if (!obj.contains(key)) return false;
        const json& v = obj.at(key);
        if (!v.is_number()) {
            issues.push_back(where + "." + key + ": expected a number");
            return false;
        }
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            issues.push_back(where + "." + key + ": not finite");
            return false;
        }
        if (require_positive && !(x > 0.0)) {
            issues.push_back(where + "." + key + ": must be positive");
            return false;
        }
        out = x;
        return true;
    }

    bool integer(const json& obj, const std::string& where, const std::string& key,
                 int& out, int min_value) {
        double x;
        if (!number(obj, where, key, x)) return false;
        if (x != std::floor(x) || x < min_value || x > 1e9) {
            issues.push_back(where + "." + key + ": expected an integer >= " +
                             std::to_string(min_value));
            return false;
        }
        out = int(x);
        return true;
    }
};

} // namespace

ScenarioConfig validate_config(const std::string& raw_text) {
    DuplicateKeyCheck dup;
    json::sax_parse(raw_text, &dup);
    if (!dup.issues.empty()) throw ConfigError(std::move(dup.issues));

    const json doc = json::parse(raw_text);
    Reader r;
    if (!doc.is_object()) throw ConfigError({"top level: expected a JSON object"});

    r.unknown_keys(doc, "top level",
                   {"scenario", "seed", "output_dir", "trap", "atom_schedule", "blockade",
                    "lasers", "sweep", "curve", "oracle", "clip_to_gas"});

    ScenarioConfig c = default_config();
    if (!doc.contains("scenario")) {
        r.issues.push_back("top level: missing required key 'scenario'");
    } else if (!doc.at("scenario").is_string()) {
        r.issues.push_back("scenario: expected a string");
    } else {
        try {
            c.scenario = scenario_from_name(doc.at("scenario").get<std::string>());
        } catch (const std::invalid_argument& ex) {
            r.issues.push_back(std::string("scenario: ") + ex.what());
        }
    }

    if (doc.contains("seed")) {
        if (doc.at("seed").is_number_unsigned() || doc.at("seed").is_number_integer())
            c.seed = doc.at("seed").get<std::uint64_t>();
        else
            r.issues.push_back("seed: expected a non-negative integer");
    }
    if (doc.contains("output_dir")) {
        if (doc.at("output_dir").is_string())
            c.output_dir = doc.at("output_dir").get<std::string>();
        else
            r.issues.push_back("output_dir: expected a string");
    }
    if (doc.contains("clip_to_gas")) {
        if (doc.at("clip_to_gas").is_boolean())
            c.clip_to_gas = doc.at("clip_to_gas").get<bool>();
        else
            r.issues.push_back("clip_to_gas: expected a boolean");
    }

    if (doc.contains("trap")) {
        const json& t = doc.at("trap");
        r.unknown_keys(t, "trap",
                       {"omega_x_hz", "omega_y_hz", "omega_z_hz", "scattering_length_a0",
                        "atom_number"});
        double x;
        if (r.number(t, "trap", "omega_x_hz", x, true)) c.trap.omega_x = two_pi * x;
        if (r.number(t, "trap", "omega_y_hz", x, true)) c.trap.omega_y = two_pi * x;
        if (r.number(t, "trap", "omega_z_hz", x, true)) c.trap.omega_z = two_pi * x;
        if (r.number(t, "trap", "scattering_length_a0", x, true))
            c.trap.scattering_length = x * bohr_radius;
        if (r.number(t, "trap", "atom_number", x, true)) c.trap.atom_number = x;
        if (c.trap.atom_number < 1.0) r.issues.push_back("trap.atom_number: must be >= 1");
    }

    if (doc.contains("atom_schedule")) {
        const json& s = doc.at("atom_schedule");
        if (!s.is_array() || s.size() < 2) {
            r.issues.push_back("atom_schedule: expected an array of >= 2 [T_K, N] rows");
        } else {
            std::vector<std::pair<double, double>> table;
            bool ok = true;
            for (const auto& row : s) {
                if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
                    !row[1].is_number()) {
                    r.issues.push_back("atom_schedule: each row must be [T_K, N]");
                    ok = false;
                    break;
                }
                table.emplace_back(row[0].get<double>(), row[1].get<double>());
            }
            if (ok) {
                try {
                    AtomSchedule sched{std::move(table)};
                    sched.validate();
                    c.schedule = std::move(sched);
                } catch (const std::invalid_argument& ex) {
                    r.issues.push_back(std::string("atom_schedule: ") + ex.what());
                }
            }
        }
    }

    if (doc.contains("lasers")) {
        const json& l = doc.at("lasers");
        r.unknown_keys(l, "lasers", {"rabi_1_hz", "rabi_2_hz", "detuning_hz", "linewidth_hz"});
        double x;
        if (r.number(l, "lasers", "rabi_1_hz", x, true)) c.lasers.omega_1 = two_pi * x;
        if (r.number(l, "lasers", "rabi_2_hz", x, true)) c.lasers.omega_2 = two_pi * x;
        if (r.number(l, "lasers", "detuning_hz", x, true)) c.lasers.detuning = two_pi * x;
        if (r.number(l, "lasers", "linewidth_hz", x, true)) c.lasers.linewidth = two_pi * x;
    }
    if (c.lasers.detuning < 10.0 * c.lasers.omega_1)
        c.warnings.push_back("lasers: detuning below 10x the 5S-5P Rabi frequency; "
                             "the far-detuned scattering estimate degrades");

    if (doc.contains("blockade")) {
        const json& b = doc.at("blockade");
        r.unknown_keys(b, "blockade", {"c6_au", "kappa", "z_lattice", "rabi_reduction"});
        double x;
        if (r.number(b, "blockade", "c6_au", x)) {
            if (x == 0.0)
                r.issues.push_back("blockade.c6_au: must be nonzero");
            else
                c.blockade.c6 = c6_au_to_si(x);
        }
        if (r.number(b, "blockade", "kappa", x, true)) c.blockade.kappa = x;
        if (r.number(b, "blockade", "z_lattice", x, true)) c.blockade.z_lattice = x;
        if (r.number(b, "blockade", "rabi_reduction", x, true)) c.blockade.rabi_reduction = x;
    }
    // Resolve the effective Rabi frequency from the (possibly updated) lasers.
    if (r.issues.empty()) c.blockade = BlockadeParams::from_lasers(c.lasers, c.blockade);

    if (doc.contains("sweep")) {
        const json& s = doc.at("sweep");
        r.unknown_keys(s, "sweep",
                       {"temperature_min_k", "temperature_max_k", "temperature_points",
                        "temperatures_k", "pulse_durations_ns"});
        double tmin = c.temperatures.front(), tmax = c.temperatures.back();
        int points = int(c.temperatures.size());
        const bool has_range = s.contains("temperature_min_k") ||
                               s.contains("temperature_max_k") ||
                               s.contains("temperature_points");
        r.number(s, "sweep", "temperature_min_k", tmin, true);
        r.number(s, "sweep", "temperature_max_k", tmax, true);
        r.integer(s, "sweep", "temperature_points", points, 1);
        if (s.contains("temperatures_k")) {
            if (has_range)
                r.issues.push_back("sweep: give either temperatures_k or a range, not both");
            const json& arr = s.at("temperatures_k");
            if (!arr.is_array()) {
                r.issues.push_back("sweep.temperatures_k: expected an array");
            } else {
                c.temperatures.clear();
                for (const auto& v : arr) {
                    if (!v.is_number() || !(v.get<double>() > 0.0)) {
                        r.issues.push_back("sweep.temperatures_k: entries must be positive numbers");
                        break;
                    }
                    c.temperatures.push_back(v.get<double>());
                }
            }
        } else if (has_range) {
            if (!(tmax > tmin))
                r.issues.push_back("sweep: temperature_max_k must exceed temperature_min_k");
            else {
                c.temperatures.clear();
                for (int i = 0; i < points; ++i)
                    c.temperatures.push_back(
                        points == 1 ? tmin
                                    : tmin * std::pow(tmax / tmin, double(i) / (points - 1)));
            }
        }
        if (s.contains("pulse_durations_ns")) {
            const json& arr = s.at("pulse_durations_ns");
            if (!arr.is_array()) {
                r.issues.push_back("sweep.pulse_durations_ns: expected an array");
            } else {
                c.durations.clear();
                for (const auto& v : arr) {
                    if (!v.is_number() || !(v.get<double>() > 0.0)) {
                        r.issues.push_back(
                            "sweep.pulse_durations_ns: entries must be positive numbers");
                        break;
                    }
                    c.durations.push_back(v.get<double>() * 1e-9);
                }
            }
        }
        if (c.temperatures.empty())
            r.issues.push_back("sweep: temperature list must not be empty");
        if (c.durations.empty())
            r.issues.push_back("sweep: pulse duration list must not be empty");
    }

    if (doc.contains("curve")) {
        const json& cu = doc.at("curve");
        r.unknown_keys(cu, "curve", {"temperature_k", "points", "tau_max_factor"});
        double x;
        if (r.number(cu, "curve", "temperature_k", x, true)) c.curve_temperature = x;
        r.integer(cu, "curve", "points", c.curve_points, 8);
        if (r.number(cu, "curve", "tau_max_factor", x, true)) c.curve_tau_factor = x;
    }

    if (doc.contains("oracle")) {
        const json& o = doc.at("oracle");
        r.unknown_keys(o, "oracle", {"n_min", "n_max", "samples", "crossover_points"});
        r.integer(o, "oracle", "n_min", c.oracle_n_min, 1);
        r.integer(o, "oracle", "n_max", c.oracle_n_max, 1);
        r.integer(o, "oracle", "samples", c.oracle_samples, 16);
        r.integer(o, "oracle", "crossover_points", c.crossover_points, 3);
        if (c.oracle_n_max > 14) r.issues.push_back("oracle.n_max: at most 14 atoms");
        if (c.oracle_n_min > c.oracle_n_max)
            r.issues.push_back("oracle: n_min must not exceed n_max");
    }

    if (!r.issues.empty()) throw ConfigError(std::move(r.issues));
    return c;
}

std::string config_to_json(const ScenarioConfig& c) {
    json doc;
    doc["scenario"] = scenario_name(c.scenario);
    doc["seed"] = c.seed;
    doc["output_dir"] = c.output_dir;
    doc["clip_to_gas"] = c.clip_to_gas;
    doc["trap"] = {{"omega_x_hz", c.trap.omega_x / two_pi},
                   {"omega_y_hz", c.trap.omega_y / two_pi},
                   {"omega_z_hz", c.trap.omega_z / two_pi},
                   {"scattering_length_a0", c.trap.scattering_length / bohr_radius},
                   {"atom_number", c.trap.atom_number}};
    json sched = json::array();
    for (const auto& [t, n] : c.schedule.table) sched.push_back({t, n});
    doc["atom_schedule"] = sched;
    doc["lasers"] = {{"rabi_1_hz", c.lasers.omega_1 / two_pi},
                     {"rabi_2_hz", c.lasers.omega_2 / two_pi},
                     {"detuning_hz", c.lasers.detuning / two_pi},
                     {"linewidth_hz", c.lasers.linewidth / two_pi}};
    doc["blockade"] = {{"c6_au", c6_si_to_au(c.blockade.c6)},
                       {"kappa", c.blockade.kappa},
                       {"z_lattice", c.blockade.z_lattice},
                       {"rabi_reduction", c.blockade.rabi_reduction}};
    json temps = json::array();
    for (double t : c.temperatures) temps.push_back(t);
    json durations = json::array();
    for (double d : c.durations) {
        // Snap to the nearest integer nanosecond when the conversion noise is
        // below one part in 1e12, so round-tripped configs stay readable.
        double ns = d * 1e9;
        const double snapped = std::round(ns);
        if (snapped != 0.0 && std::abs(ns - snapped) < 1e-12 * std::abs(snapped))
            ns = snapped;
        durations.push_back(ns);
    }
    doc["sweep"] = {{"temperatures_k", temps}, {"pulse_durations_ns", durations}};
    json curve = {{"points", c.curve_points}, {"tau_max_factor", c.curve_tau_factor}};
    if (c.curve_temperature > 0.0) curve["temperature_k"] = c.curve_temperature;
    doc["curve"] = curve;
    doc["oracle"] = {{"n_min", c.oracle_n_min},
                     {"n_max", c.oracle_n_max},
                     {"samples", c.oracle_samples},
                     {"crossover_points", c.crossover_points}};
    return doc.dump(2);
}

} // namespace rydsim
