#ifndef RYDSIM_EXCITATION_HPP
#define RYDSIM_EXCITATION_HPP

#include <functional>
#include <span>
#include <vector>

#include "rydsim/gas_model.hpp"
#include "rydsim/superatom_model.hpp"

namespace rydsim {

// Spherically reduced density profile, the common currency of the
// excitation integrals. Synthetic profiles (slabs, Gaussians) and the
// bimodal trap profiles all reduce to this.
struct RadialProfile {
    std::function<double(double)> density; // m^-3 as a function of r
    double r_max = 0.0;                    // integration cutoff
    double peak = 0.0;                     // density at r = 0
};

RadialProfile as_radial(const DensityProfile& profile);
RadialProfile thermal_radial(const DensityProfile& profile);
RadialProfile uniform_slab(double density, double radius);
RadialProfile gaussian_profile(double peak_density, double sigma);

// Eq.-of-motion observable: N_R(tau) = integral of n_R sin^2(Omega_c tau / 2).
// `clip_to_gas` caps n_R at n_g in the far wings where the saturated-density
// model turns unphysical; the default keeps the raw model.
double rydberg_number(const RadialProfile& profile, const BlockadeParams& params,
                      double tau, bool clip_to_gas = false);

// Long-time (dephased) saturation value, (1/2) integral of n_R.
double saturation_number(const RadialProfile& profile, const BlockadeParams& params,
                         bool clip_to_gas = false);

// Saturated Rydberg count restricted to [0, r_limit]; used for the
// excitations-in-the-BEC headline number.
double saturated_number_within(const RadialProfile& profile, const BlockadeParams& params,
                               double r_limit);

// Origin-constrained linear fit of a curve sampler over the window where the
// sampled value stays below half of `saturation`, at least 20 points.
// `tau_probe` seeds the window search. Throws std::runtime_error when the
// window cannot be resolved.
double initial_slope(const std::function<double(double)>& sampler, double saturation,
                     double tau_probe);

struct ExcitationCurve {
    std::vector<double> times;   // s
    std::vector<double> n_r;     // excitation count at each time
    std::vector<double> f_total; // n_r / atom count
    double n_sat = 0.0;
    double slope = 0.0;          // counts/s
    double tau_s = 0.0;          // n_sat / slope
};

ExcitationCurve excitation_curve(const RadialProfile& profile, const BlockadeParams& params,
                                 std::span<const double> times, double atom_count);

// Piecewise log-log interpolation of the atom number along the evaporation
// ramp, clamped outside the table.
struct AtomSchedule {
    std::vector<std::pair<double, double>> table; // (T in K, N), ascending in T
    double atoms_at(double temperature) const;
    void validate() const;
};

struct SweepPoint {
    double temperature = 0.0;
    double t_over_tc = 0.0;
    double t_critical = 0.0;
    double atom_number = 0.0;
    double condensate_fraction = 0.0;
    double peak_density_total = 0.0;
    double peak_density_thermal = 0.0;
    std::vector<double> f_total;        // one entry per pulse duration
    std::vector<double> f_thermal_only;
};

struct SweepResult {
    std::vector<double> durations; // s
    std::vector<SweepPoint> points; // ascending temperature
};

SweepResult fraction_sweep(const TrapConfig& base_trap, const AtomSchedule& schedule,
                           const BlockadeParams& params,
                           std::span<const double> durations,
                           std::span<const double> temperatures,
                           bool clip_to_gas = false);

// Fixed-shape profile family for the scaling studies.
struct FamilyMember {
    RadialProfile profile;
    double atom_count = 0.0;
    double peak_density = 0.0;
};

std::vector<FamilyMember> gaussian_profile_family(double peak_min, double peak_max,
                                                  int count, double sigma);

struct RegimeExponents {
    PowerLawFit short_time;    // expect ~0
    PowerLawFit intermediate;  // expect ~ -2/5
    PowerLawFit long_time;     // expect ~ -4/5
};

// Exponents of f = N_R / N_g versus peak density at the three pulse
// durations. Throws std::invalid_argument when tau_short is not deep in the
// perturbative regime for every family member.
RegimeExponents fraction_regime_exponents(const BlockadeParams& params,
                                          std::span<const FamilyMember> family,
                                          double tau_short, double tau_mid,
                                          double tau_long);

struct RegimeTimes {
    double tau_short, tau_mid, tau_long;
};

RegimeTimes suggest_regime_times(const BlockadeParams& params,
                                 std::span<const FamilyMember> family);

// Index of an interior sample exceeding both neighbours by more than
// rel_threshold (relative), or -1 when none exists.
int interior_local_maximum(std::span<const double> values, double rel_threshold = 0.02);

// Condensation-kink verdict for one pulse duration of a sweep. The fraction
// curve "kinks" when it rises while cooling towards T_c and then drops once
// the condensate forms:
//   - window: sweep points with T_c <= T <= 1.3 T_c (per-point T_c),
//   - rise:   max f in the window exceeds f at the window's hot edge by
//             theta_rise,
//   - drop:   the same max exceeds f at the warmest point with T <= 0.9 T_c
//             by theta_drop.
// Both must hold for a detection. The thresholds are pinned at 1.5%; they
// separate the near-flat short-pulse curve (no rise) and the saturated
// long-pulse curve (no drop: f keeps climbing below T_c) from the
// intermediate pulses.
struct KinkVerdict {
    bool detected = false;
    bool rise_ok = false;
    bool drop_ok = false;
    double peak_t_over_tc = 0.0; // location of the window maximum
    double rise = 0.0;           // relative rise over the window's hot edge
    double drop = 0.0;           // relative drop below T_c
    bool thermal_monotone = false; // no interior max of f_thermal in window
};

KinkVerdict detect_kink(const SweepResult& sweep, std::size_t duration_index,
                        double theta_rise = 0.015, double theta_drop = 0.015);

} // namespace rydsim

#endif
