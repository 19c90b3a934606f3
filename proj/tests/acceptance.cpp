// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rydsim/config.hpp"
#include "rydsim/excitation.hpp"
#include "rydsim/gas_model.hpp"
#include "rydsim/numerics.hpp"
#include "rydsim/oracle.hpp"
#include "rydsim/scenario.hpp"
#include "rydsim/superatom_model.hpp"

using namespace rydsim;
using namespace rydsim::constants;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  %2d. %s — %s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

BlockadeParams default_params() { return BlockadeParams::from_lasers(LaserParams{}); }

// --- criteria -------------------------------------------------------------

void criterion_packing_identity() {
    const double r_b = blockade_radius_from_density(9e15);
    const bool ok = std::abs(r_b - 5.4e-6) <= 0.05e-6;
    report(1, "packing identity n_R = sqrt(2) r_b^-3", ok,
           fmt("r_b(9e15 m^-3) = %.4f um (want 5.40 +- 0.05)", r_b * 1e6));
}

void criterion_fcc_constant() {
    const double first = fcc_lattice_sum(1);
    const double converged = fcc_lattice_sum(40);
    const bool ok = std::abs(first - 12.0) < 1e-9 && std::abs(converged - 14.45) <= 0.05;
    report(2, "fcc lattice-sum constant", ok,
           fmt("first shell = %.9f (want 12), 40 shells = %.4f (want 14.45 +- 0.05)",
               first, converged));
}

void criterion_two_photon_rabi() {
    const double rabi = two_photon_rabi(LaserParams{});
    const bool ok = std::abs(rabi - two_pi * 110.4e3) <= two_pi * 0.1e3;
    report(3, "two-photon Rabi frequency", ok,
           fmt("Omega1 Omega2 / (2 Delta) = 2 pi x %.2f kHz (want 110.4 +- 0.1)",
               rabi / two_pi / 1e3));
}

void criterion_scattering() {
    const double p = scattering_probability(LaserParams{}, 1.97e-6);
    const bool ok = p >= 0.005 && p <= 0.02;
    report(4, "off-resonant scattering estimate", ok,
           fmt("P(scatter, 1.97 us) = %.4f (want within [0.005, 0.02])", p));
}

void criterion_headline_densities() {
    const BlockadeParams params = default_params();
    const LocalBlockade lb = saturation_density(4.9e19, params);
    const bool density_ok = lb.n_r >= 4.5e15 && lb.n_r <= 1.8e16; // factor 2 of 9e15

    TrapConfig trap;
    trap.atom_number = 1e5; // coldest point of the evaporation ramp
    const GasState state = equilibrium_state(trap, 200e-9);
    const DensityProfile profile(trap, state);
    const double in_bec =
        saturated_number_within(as_radial(profile), params, profile.tf_radius());
    const bool count_ok = in_bec >= 5.0 / 3.0 && in_bec <= 15.0; // factor 3 of 5
    report(5, "headline Rydberg densities", density_ok && count_ok,
           fmt("n_R(4.9e19) = %.2e m^-3 (want 9e15 x/ 2); excitations in BEC = %.2f "
               "(want 5 x/ 3)",
               lb.n_r, in_bec));
}

void criterion_closed_form_scalings() {
    const BlockadeParams base = default_params();
    const double sigma = 10e-6;
    const auto family = gaussian_profile_family(1e19, 1e20, 7, sigma);

    auto slope_of = [&](const RadialProfile& profile, const BlockadeParams& p) {
        const double n_sat = saturation_number(profile, p);
        const double omega_peak = saturation_density(profile.peak, p).omega_c;
        return initial_slope(
            [&](double tau) { return rydberg_number(profile, p, tau); }, n_sat,
            0.1 / omega_peak);
    };

    std::vector<std::pair<double, double>> nsat_ng, slope_ng, nsat_w, slope_w;
    for (const FamilyMember& m : family) {
        nsat_ng.emplace_back(m.peak_density, saturation_number(m.profile, base));
        slope_ng.emplace_back(m.peak_density, slope_of(m.profile, base));
    }
    const RadialProfile fixed = gaussian_profile(4e19, sigma);
    for (int i = 0; i < 7; ++i) {
        BlockadeParams p = base;
        p.omega_0 = two_pi * 5e3 * std::pow(10.0, i / 6.0);
        nsat_w.emplace_back(p.omega_0, saturation_number(fixed, p));
        slope_w.emplace_back(p.omega_0, slope_of(fixed, p));
    }

    const double e_nsat_ng = fit_power_law(nsat_ng).exponent;
    const double e_nsat_w = fit_power_law(nsat_w).exponent;
    const double e_slope_ng = fit_power_law(slope_ng).exponent;
    const double e_slope_w = fit_power_law(slope_w).exponent;
    const bool ok = std::abs(e_nsat_ng - 0.2) <= 0.03 && std::abs(e_nsat_w - 0.4) <= 0.03 &&
                    std::abs(e_slope_ng - 0.6) <= 0.03 && std::abs(e_slope_w - 1.2) <= 0.03;
    report(6, "closed-form N_sat and slope scalings", ok,
           fmt("N_sat ~ n^%.3f w^%.3f (want 0.2/0.4 +- 0.03); R ~ n^%.3f w^%.3f "
               "(want 0.6/1.2 +- 0.03)",
               e_nsat_ng, e_nsat_w, e_slope_ng, e_slope_w));
}

void criterion_fraction_regimes() {
    const BlockadeParams params = default_params();
    const auto family = gaussian_profile_family(5e18, 1e20, 7, 10e-6);
    const RegimeTimes times = suggest_regime_times(params, family);
    const RegimeExponents exps = fraction_regime_exponents(params, family, times.tau_short,
                                                           times.tau_mid, times.tau_long);
    const bool ok = std::abs(exps.short_time.exponent - 0.0) <= 0.05 &&
                    std::abs(exps.intermediate.exponent + 0.4) <= 0.05 &&
                    std::abs(exps.long_time.exponent + 0.8) <= 0.05;
    report(7, "Rydberg-fraction density regimes", ok,
           fmt("f ~ n^%.3f / n^%.3f / n^%.3f (want 0 / -0.4 / -0.8 +- 0.05)",
               exps.short_time.exponent, exps.intermediate.exponent,
               exps.long_time.exponent));
}

void criterion_kink() {
    const ScenarioConfig cfg = default_config(Scenario::Fig2b);
    const SweepResult sweep = fraction_sweep(cfg.trap, cfg.schedule, cfg.blockade,
                                             cfg.durations, cfg.temperatures);
    // Durations 170 / 320 / 370 / 1970 ns; thresholds pinned in detect_kink.
    const KinkVerdict v170 = detect_kink(sweep, 0);
    const KinkVerdict v320 = detect_kink(sweep, 1);
    const KinkVerdict v370 = detect_kink(sweep, 2);
    const KinkVerdict v1970 = detect_kink(sweep, 3);
    const bool ok = !v170.detected && v320.detected && v370.detected && !v1970.detected &&
                    v320.thermal_monotone && v370.thermal_monotone &&
                    v320.peak_t_over_tc >= 1.0 && v320.peak_t_over_tc <= 1.3 &&
                    v370.peak_t_over_tc >= 1.0 && v370.peak_t_over_tc <= 1.3;
    report(8, "condensation kink at intermediate pulses only", ok,
           fmt("detected 170/320/370/1970 ns = %d/%d/%d/%d (want 0/1/1/0); "
               "thermal monotone = %d/%d; peak at T/T_c = %.2f, %.2f",
               int(v170.detected), int(v320.detected), int(v370.detected),
               int(v1970.detected), int(v320.thermal_monotone),
               int(v370.thermal_monotone), v320.peak_t_over_tc, v370.peak_t_over_tc));
}

void criterion_density_jump() {
    TrapConfig trap; // static preset, 4e5 atoms
    const double tc = critical_temperature(trap);
    const DensityProfile below(trap, equilibrium_state(trap, 0.95 * tc));
    const DensityProfile above(trap, equilibrium_state(trap, 1.05 * tc));
    const double jump = below.peak_total() / above.peak_thermal();
    const bool ok = jump >= 2.0 && jump <= 6.0;
    report(9, "peak-density jump across condensation", ok,
           fmt("n(0.95 T_c) / n_th(1.05 T_c) = %.2f (want within [2, 6])", jump));
}

void criterion_sqrt_n_oracle() {
    const BlockadeParams params = default_params();
    const double omega0 = params.omega_0;
    const double c6 = params.c6;

    double worst_rel = 0.0, worst_norm = 0.0;
    for (int n = 2; n <= 8; ++n) {
        OracleSystem sys;
        sys.omega_0 = omega0;
        sys.c6 = c6;
        sys.positions = strong_blockade_positions(n, omega0, c6, 1234);
        const double omega_n = std::sqrt(double(n)) * omega0;
        const EvolutionResult res = evolve(sys, 6.0 * two_pi / omega_n, 1024);
        worst_rel = std::max(worst_rel,
                             std::abs(res.extracted_frequency / omega_n - 1.0));
        for (double norm : res.norms)
            worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    }

    const double r_b = pair_blockade_radius(omega0, c6);
    std::vector<double> distances;
    for (int i = 0; i < 13; ++i)
        distances.push_back(r_b / 4.0 * std::pow(16.0, i / 12.0));
    const auto rows = blockade_crossover(omega0, c6, distances, 512);
    double d50 = 0.0;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1].max_double < 0.5 && rows[i].max_double >= 0.5) {
            const double w = (0.5 - rows[i - 1].max_double) /
                             (rows[i].max_double - rows[i - 1].max_double);
            d50 = rows[i - 1].distance *
                  std::pow(rows[i].distance / rows[i - 1].distance, w);
            break;
        }
    const bool ok = worst_rel <= 0.005 && worst_norm <= 1e-9 && d50 > 0.5 * r_b &&
                    d50 < 2.0 * r_b;
    report(10, "oracle sqrt(N) law and blockade crossover", ok,
           fmt("max |f/(sqrt(N) w0) - 1| = %.2e (want <= 5e-3); max norm drift = %.1e; "
               "50%% point at %.2f r_b (want within factor 2)",
               worst_rel, worst_norm, d50 / r_b));
}

void criterion_oracle_vs_model() {
    const BlockadeParams params = default_params();
    // Pick n_g so one blockade sphere holds exactly 9 atoms.
    const double n_g = solve_monotone(
        [&](double n) { return saturation_density(n, params).atoms_per_superatom - 9.0; },
        1e15, 1e25);
    const LocalBlockade lb = saturation_density(n_g, params);
    const double omega_c = lb.omega_c; // 3 Omega0

    const RadialProfile slab = uniform_slab(n_g, lb.blockade_radius);
    std::vector<double> times, values;
    const int samples = 384;
    const double t_max = 6.0 * two_pi / omega_c;
    for (int i = 0; i < samples; ++i) {
        times.push_back(t_max * i / (samples - 1));
        values.push_back(rydberg_number(slab, params, times.back()));
    }
    const double model_freq = extract_frequency(times, values);

    OracleSystem sys;
    sys.omega_0 = params.omega_0;
    sys.c6 = params.c6;
    sys.positions = strong_blockade_positions(9, params.omega_0, params.c6, 77);
    const EvolutionResult res = evolve(sys, t_max, 1024);

    const double rel = std::abs(model_freq / res.extracted_frequency - 1.0);
    const bool ok = rel <= 0.01;
    report(11, "slab model matches the exact 9-atom oracle", ok,
           fmt("model %.4f vs oracle %.4f (x Omega0), rel diff %.2e (want <= 1e-2)",
               model_freq / params.omega_0, res.extracted_frequency / params.omega_0,
               rel));
}

void criterion_determinism() {
    // Byte-identical artifacts across two identical runs.
    ScenarioConfig cfg = default_config(Scenario::Fig1);
    const fs::path dir_a = fs::temp_directory_path() / "rydsim_accept_a";
    const fs::path dir_b = fs::temp_directory_path() / "rydsim_accept_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    cfg.output_dir = dir_a.string();
    const OutputBundle a = run_scenario(cfg);
    cfg.output_dir = dir_b.string();
    const OutputBundle b = run_scenario(cfg);
    bool identical = a.csv_files.size() == b.csv_files.size();
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };
    for (size_t i = 0; identical && i < a.csv_files.size(); ++i)
        identical = slurp(a.csv_files[i]) == slurp(b.csv_files[i]);
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);

    // Production quadrature against a brute-force Riemann sum.
    const BlockadeParams params = default_params();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> log_n(std::log(1e18), std::log(2e20));
    std::uniform_real_distribution<double> sig(4e-6, 20e-6);
    std::uniform_real_distribution<double> tau_dist(50e-9, 2e-6);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double n0 = std::exp(log_n(rng));
        const double sigma = sig(rng);
        const double tau = tau_dist(rng);
        const RadialProfile profile = gaussian_profile(n0, sigma);
        const double adaptive = rydberg_number(profile, params, tau);

        const int shells = 100000;
        const double dr = profile.r_max / shells;
        double riemann = 0.0;
        for (int k = 0; k < shells; ++k) {
            const double r = (k + 0.5) * dr;
            const LocalBlockade lb = saturation_density(profile.density(r), params);
            const double s = std::sin(0.5 * lb.omega_c * tau);
            riemann += lb.n_r * s * s * 4.0 * pi * r * r * dr;
        }
        worst = std::max(worst, std::abs(adaptive / riemann - 1.0));
    }
    const bool ok = identical && worst <= 1e-3;
    report(12, "determinism and quadrature cross-check", ok,
           fmt("CSV bytes identical = %d; max |adaptive/Riemann - 1| = %.2e "
               "(want <= 1e-3)",
               int(identical), worst));
}

} // namespace

int main() {
    criterion_packing_identity();
    criterion_fcc_constant();
    criterion_two_photon_rabi();
    criterion_scattering();
    criterion_headline_densities();
    criterion_closed_form_scalings();
    criterion_fraction_regimes();
    criterion_kink();
    criterion_density_jump();
    criterion_sqrt_n_oracle();
    criterion_oracle_vs_model();
    criterion_determinism();

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
