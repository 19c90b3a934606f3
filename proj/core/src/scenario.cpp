#include "rydsim/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "rydsim/oracle.hpp"
#include "rydsim/output.hpp"

namespace rydsim {

namespace fs = std::filesystem;
using namespace constants;

namespace {

double to_ns(double seconds) {
    double ns = seconds * 1e9;
    const double snapped = std::round(ns);
    if (snapped != 0.0 && std::abs(ns - snapped) < 1e-12 * std::abs(snapped)) ns = snapped;
    return ns;
}

struct Runner {
    const ScenarioConfig& cfg;
    fs::path dir;
    OutputBundle bundle;

    CsvWriter csv(const std::string& name, const std::vector<std::string>& header) {
        bundle.csv_files.push_back(dir / name);
        return CsvWriter(dir / name, header);
    }

    void svg(const std::string& name, const std::string& title,
             const std::vector<SvgSeries>& series, bool log_x = false, bool log_y = false) {
        const fs::path p = dir / name;
        write_svg_plot(p, title, series, log_x, log_y);
        bundle.svg_files.push_back(p);
    }

    SweepResult sweep() const {
        return fraction_sweep(cfg.trap, cfg.schedule, cfg.blockade, cfg.durations,
                              cfg.temperatures, cfg.clip_to_gas);
    }

    void fig1();
    void fig2b();
    void fig3();
    void scalings();
    void oracle_sqrtn();
    void oracle_crossover();
    void curve();
};

void Runner::fig1() {
    CsvWriter out = csv("fig1.csv", {"T_K", "peak_density_total", "peak_density_thermal",
                                     "condensate_fraction"});
    SvgSeries total{"peak total", {}, {}}, thermal{"peak thermal", {}, {}};
    SvgSeries frac{"condensate fraction", {}, {}};
    std::vector<double> temps = cfg.temperatures;
    std::sort(temps.begin(), temps.end());
    for (double t : temps) {
        TrapConfig trap = cfg.trap;
        trap.atom_number = cfg.schedule.atoms_at(t);
        const DensityProfile profile(trap, equilibrium_state(trap, t));
        out.row({t, profile.peak_total(), profile.peak_thermal(),
                 profile.state().condensate_fraction()});
        total.x.push_back(t);
        total.y.push_back(profile.peak_total());
        thermal.x.push_back(t);
        thermal.y.push_back(profile.peak_thermal());
        frac.x.push_back(t);
        frac.y.push_back(profile.state().condensate_fraction());
    }
    out.close();
    svg("fig1_density.svg", "Peak density vs temperature", {total, thermal}, true, true);
    svg("fig1_fraction.svg", "Condensate fraction vs temperature", {frac}, true, false);
}

void Runner::fig2b() {
    const SweepResult res = sweep();
    CsvWriter out = csv("fig2b.csv", {"T_K", "duration_ns", "f_total", "f_thermal_only"});
    for (size_t d = 0; d < res.durations.size(); ++d)
        for (const auto& p : res.points)
            out.row({p.temperature, to_ns(res.durations[d]), p.f_total[d],
                     p.f_thermal_only[d]});
    out.close();

    // Cosmetic per-duration decade offsets, mirroring the usual presentation;
    // the CSV stores the unshifted values.
    std::vector<SvgSeries> series;
    for (size_t d = 0; d < res.durations.size(); ++d) {
        const double shift = std::pow(10.0, double(d));
        SvgSeries tot{format_number(to_ns(res.durations[d])) + " ns", {}, {}};
        SvgSeries th{format_number(to_ns(res.durations[d])) + " ns thermal", {}, {}};
        for (const auto& p : res.points) {
            tot.x.push_back(p.temperature);
            tot.y.push_back(p.f_total[d] * shift);
            th.x.push_back(p.temperature);
            th.y.push_back(p.f_thermal_only[d] * shift);
        }
        series.push_back(std::move(tot));
        series.push_back(std::move(th));
    }
    svg("fig2b.svg", "Rydberg fraction vs temperature", series, true, true);
}

void Runner::fig3() {
    const double t = *std::min_element(cfg.temperatures.begin(), cfg.temperatures.end());
    TrapConfig trap = cfg.trap;
    trap.atom_number = cfg.schedule.atoms_at(t);
    const DensityProfile profile(trap, equilibrium_state(trap, t));

    auto write_cross_section = [&](const std::string& name, const RadialProfile& radial) {
        CsvWriter out = csv(name, {"r_m", "n_g", "n_R", "f_local_clipped", "f_local_raw"});
        SvgSeries ng{"n_g", {}, {}}, nr{"n_R", {}, {}};
        SvgSeries fc{"f clipped", {}, {}}, fr{"f raw", {}, {}};
        const int points = 400;
        for (int i = 0; i <= points; ++i) {
            const double r = radial.r_max * i / points;
            const double n_g = radial.density(r);
            const LocalBlockade lb = saturation_density(n_g, cfg.blockade);
            out.row({r, n_g, lb.n_r, lb.f_local, lb.f_local_raw});
            ng.x.push_back(r);
            ng.y.push_back(std::max(n_g, 1.0));
            nr.x.push_back(r);
            nr.y.push_back(std::max(lb.n_r, 1.0));
            fc.x.push_back(r);
            fc.y.push_back(std::max(lb.f_local, 1e-12));
            fr.x.push_back(r);
            fr.y.push_back(std::max(lb.f_local_raw, 1e-12));
        }
        out.close();
        return std::vector<SvgSeries>{ng, nr, fc, fr};
    };

    auto total_series = write_cross_section("fig3.csv", as_radial(profile));
    auto thermal_series = write_cross_section("fig3_thermal.csv", thermal_radial(profile));
    svg("fig3_density.svg", "Radial densities at the lowest temperature",
        {total_series[0], total_series[1], thermal_series[0], thermal_series[1]}, false, true);
    svg("fig3_fraction.svg", "Local Rydberg fraction", {total_series[2], total_series[3]},
        false, true);
}

void Runner::scalings() {
    const double sigma = 10e-6;
    const auto family = gaussian_profile_family(1e19, 1e20, 9, sigma);

    auto curve_for = [&](const FamilyMember& m, const BlockadeParams& p) {
        const double n_sat = saturation_number(m.profile, p);
        const double omega_peak = saturation_density(m.peak_density, p).omega_c;
        const double slope = initial_slope(
            [&](double tau) { return rydberg_number(m.profile, p, tau); }, n_sat,
            0.1 / omega_peak);
        return std::pair{n_sat, slope};
    };

    std::vector<std::pair<double, double>> nsat_ng, slope_ng, nsat_w, slope_w;
    for (const auto& m : family) {
        auto [n_sat, slope] = curve_for(m, cfg.blockade);
        nsat_ng.emplace_back(m.peak_density, n_sat);
        slope_ng.emplace_back(m.peak_density, slope);
    }
    const FamilyMember& mid = family[family.size() / 2];
    for (int i = 0; i < 9; ++i) {
        BlockadeParams p = cfg.blockade;
        p.omega_0 = cfg.blockade.omega_0 * std::pow(10.0, i / 8.0 - 0.5);
        auto [n_sat, slope] = curve_for(mid, p);
        nsat_w.emplace_back(p.omega_0, n_sat);
        slope_w.emplace_back(p.omega_0, slope);
    }

    const RegimeTimes times = suggest_regime_times(cfg.blockade, family);
    const RegimeExponents regimes = fraction_regime_exponents(
        cfg.blockade, family, times.tau_short, times.tau_mid, times.tau_long);

    CsvWriter fits = csv("scalings.csv", {"fit", "exponent", "prefactor", "residual"});
    auto emit = [&fits](const std::string& name, const PowerLawFit& f) {
        fits.row_mixed({name, format_number(f.exponent), format_number(f.prefactor),
                        format_number(f.residual)});
    };
    emit("n_sat_vs_peak_density", fit_power_law(nsat_ng));
    emit("n_sat_vs_omega0", fit_power_law(nsat_w));
    emit("slope_vs_peak_density", fit_power_law(slope_ng));
    emit("slope_vs_omega0", fit_power_law(slope_w));
    emit("f_short_vs_peak_density", regimes.short_time);
    emit("f_intermediate_vs_peak_density", regimes.intermediate);
    emit("f_long_vs_peak_density", regimes.long_time);
    fits.close();

    CsvWriter samples = csv("scalings_samples.csv", {"quantity", "x", "y"});
    auto emit_samples = [&samples](const std::string& name,
                                   const std::vector<std::pair<double, double>>& data) {
        for (const auto& [x, y] : data)
            samples.row_mixed({name, format_number(x), format_number(y)});
    };
    emit_samples("n_sat_vs_peak_density", nsat_ng);
    emit_samples("n_sat_vs_omega0", nsat_w);
    emit_samples("slope_vs_peak_density", slope_ng);
    emit_samples("slope_vs_omega0", slope_w);
    samples.close();

    auto to_series = [](const std::string& label,
                        const std::vector<std::pair<double, double>>& data) {
        SvgSeries s{label, {}, {}};
        for (const auto& [x, y] : data) {
            s.x.push_back(x);
            s.y.push_back(y);
        }
        return s;
    };
    svg("scalings_density.svg", "Saturation and slope vs peak density",
        {to_series("N_sat", nsat_ng), to_series("R", slope_ng)}, true, true);
    svg("scalings_rabi.svg", "Saturation and slope vs Rabi frequency",
        {to_series("N_sat", nsat_w), to_series("R", slope_w)}, true, true);
}

void Runner::oracle_sqrtn() {
    CsvWriter summary =
        csv("oracle_sqrtn.csv", {"n_atoms", "sqrt_n", "frequency_rad_s", "frequency_over_omega0",
                                 "max_total_excitation"});
    CsvWriter series =
        csv("oracle_sqrtn_timeseries.csv", {"n_atoms", "t_s", "total_excitation", "p_single",
                                            "norm"});
    std::vector<SvgSeries> plot;
    for (int n = cfg.oracle_n_min; n <= cfg.oracle_n_max; ++n) {
        OracleSystem sys;
        sys.omega_0 = cfg.blockade.omega_0;
        sys.c6 = cfg.blockade.c6;
        sys.positions = strong_blockade_positions(n, sys.omega_0, sys.c6, cfg.seed + n);
        const double t_max = 20.0 * two_pi / (std::sqrt(double(n)) * sys.omega_0);
        const EvolutionResult evo = evolve(sys, t_max, cfg.oracle_samples);
        summary.row({double(n), std::sqrt(double(n)), evo.extracted_frequency,
                     evo.extracted_frequency / sys.omega_0, evo.max_total_excitation});
        SvgSeries s{"N=" + std::to_string(n), {}, {}};
        for (size_t k = 0; k < evo.times.size(); ++k) {
            series.row({double(n), evo.times[k], evo.total_excitation[k], evo.p_single[k],
                        evo.norms[k]});
            s.x.push_back(evo.times[k] * sys.omega_0);
            s.y.push_back(evo.total_excitation[k]);
        }
        plot.push_back(std::move(s));
    }
    summary.close();
    series.close();
    svg("oracle_sqrtn.svg", "Collective Rabi oscillations", plot);
}

void Runner::oracle_crossover() {
    const double r_b = pair_blockade_radius(cfg.blockade.omega_0, cfg.blockade.c6);
    std::vector<double> distances;
    for (int i = 0; i < cfg.crossover_points; ++i)
        distances.push_back(r_b / 4.0 *
                            std::pow(16.0, double(i) / (cfg.crossover_points - 1)));
    const auto rows =
        blockade_crossover(cfg.blockade.omega_0, cfg.blockade.c6, distances,
                           cfg.oracle_samples);

    CsvWriter out = csv("oracle_crossover.csv",
                        {"d_m", "d_over_rb", "frequency_rad_s", "frequency_over_omega0",
                         "max_double_probability"});
    SvgSeries p2{"max P(double)", {}, {}}, fr{"frequency / Omega0", {}, {}};
    for (const auto& row : rows) {
        out.row({row.distance, row.distance / r_b, row.frequency,
                 row.frequency / cfg.blockade.omega_0, row.max_double});
        p2.x.push_back(row.distance / r_b);
        p2.y.push_back(row.max_double);
        fr.x.push_back(row.distance / r_b);
        fr.y.push_back(row.frequency / cfg.blockade.omega_0);
    }
    out.close();
    svg("oracle_crossover.svg", "Two-atom blockade crossover", {p2, fr}, true, false);
}

void Runner::curve() {
    const double t = cfg.curve_temperature > 0.0
                         ? cfg.curve_temperature
                         : *std::min_element(cfg.temperatures.begin(), cfg.temperatures.end());
    TrapConfig trap = cfg.trap;
    trap.atom_number = cfg.schedule.atoms_at(t);
    const DensityProfile profile(trap, equilibrium_state(trap, t));
    const RadialProfile radial = as_radial(profile);

    // Time scale from the saturation time, then a uniform grid.
    const double n_sat = saturation_number(radial, cfg.blockade, cfg.clip_to_gas);
    const double omega_peak = saturation_density(radial.peak, cfg.blockade).omega_c;
    const double slope = initial_slope(
        [&](double tau) {
            return rydberg_number(radial, cfg.blockade, tau, cfg.clip_to_gas);
        },
        n_sat, 0.1 / omega_peak);
    const double tau_s = n_sat / slope;

    std::vector<double> times;
    for (int i = 0; i < cfg.curve_points; ++i)
        times.push_back(cfg.curve_tau_factor * tau_s * i / (cfg.curve_points - 1));
    const ExcitationCurve c =
        excitation_curve(radial, cfg.blockade, times, trap.atom_number);

    CsvWriter out = csv("curve.csv", {"tau_ns", "n_R", "f_total"});
    SvgSeries s{"N_R(tau)", {}, {}};
    for (size_t i = 0; i < c.times.size(); ++i) {
        out.row({to_ns(c.times[i]), c.n_r[i], c.f_total[i]});
        s.x.push_back(to_ns(c.times[i]));
        s.y.push_back(c.n_r[i]);
    }
    out.close();

    CsvWriter summary = csv("curve_summary.csv", {"T_K", "N_g", "N_sat", "R_per_s", "tau_s_ns"});
    summary.row({t, trap.atom_number, c.n_sat, c.slope, to_ns(c.tau_s)});
    summary.close();
    svg("curve.svg", "Excitation curve", {s});
}

} // namespace

OutputBundle run_scenario(const ScenarioConfig& config) {
    if (config.temperatures.empty())
        throw ConfigError({"sweep: temperature list must not be empty"});
    if (config.durations.empty())
        throw ConfigError({"sweep: pulse duration list must not be empty"});
    config.trap.validate();
    config.blockade.validate();
    config.schedule.validate();

    Runner runner{config, fs::path(config.output_dir), {}};
    fs::create_directories(runner.dir);

    switch (config.scenario) {
        case Scenario::Fig1: runner.fig1(); break;
        case Scenario::Fig2b: runner.fig2b(); break;
        case Scenario::Fig3: runner.fig3(); break;
        case Scenario::Scalings: runner.scalings(); break;
        case Scenario::OracleSqrtN: runner.oracle_sqrtn(); break;
        case Scenario::OracleCrossover: runner.oracle_crossover(); break;
        case Scenario::Curve: runner.curve(); break;
    }

    std::string manifest = std::string(artifact_version) + "\nscenario: " +
                           scenario_name(config.scenario) + "\n";
    for (const auto& w : config.warnings) manifest += "warning: " + w + "\n";
    manifest += "resolved config:\n" + config_to_json(config) + "\n";
    runner.bundle.manifest = runner.dir / "manifest.txt";
    write_text_file(runner.bundle.manifest, manifest);
    return runner.bundle;
}

} // namespace rydsim
