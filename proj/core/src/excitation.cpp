#include "rydsim/excitation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydsim {

using namespace constants;

RadialProfile as_radial(const DensityProfile& profile) {
    return {[profile](double r) { return profile.total(r); }, profile.r_max(),
            profile.peak_total()};
}

RadialProfile thermal_radial(const DensityProfile& profile) {
    DensityProfile th = profile.thermal_only();
    return {[th](double r) { return th.thermal(r); }, th.r_max(), th.peak_thermal()};
}

RadialProfile uniform_slab(double density, double radius) {
    return {[density](double) { return density; }, radius, density};
}

RadialProfile gaussian_profile(double peak_density, double sigma) {
    return {[peak_density, sigma](double r) {
                return peak_density * std::exp(-0.5 * r * r / (sigma * sigma));
            },
            8.0 * sigma, peak_density};
}

namespace {

// One subdivision segment per half period of the fastest oscillation in the
// integrand keeps the adaptive quadrature honest on long pulses.
int oscillation_segments(const RadialProfile& profile, const BlockadeParams& params,
                         double tau) {
    const double omega_peak = saturation_density(profile.peak, params).omega_c;
    const double half_periods = omega_peak * tau / pi;
    return std::clamp(int(half_periods) + 4, 4, 3000);
}

} // namespace

double rydberg_number(const RadialProfile& profile, const BlockadeParams& params,
                      double tau, bool clip_to_gas) {
    if (tau < 0.0) throw std::invalid_argument("rydberg_number: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    auto integrand = [&](double r) {
        const double n_g = profile.density(r);
        LocalBlockade lb = saturation_density(n_g, params);
        const double n_r = clip_to_gas ? std::min(lb.n_r, n_g) : lb.n_r;
        const double s = std::sin(0.5 * lb.omega_c * tau);
        return n_r * s * s;
    };
    return integrate_radial(integrand, profile.r_max, 1e-8,
                            oscillation_segments(profile, params, tau), 20000);
}

double saturation_number(const RadialProfile& profile, const BlockadeParams& params,
                         bool clip_to_gas) {
    auto integrand = [&](double r) {
        const double n_g = profile.density(r);
        LocalBlockade lb = saturation_density(n_g, params);
        return clip_to_gas ? std::min(lb.n_r, n_g) : lb.n_r;
    };
    return 0.5 * integrate_radial(integrand, profile.r_max, 1e-8, 8, 20000);
}

double saturated_number_within(const RadialProfile& profile, const BlockadeParams& params,
                               double r_limit) {
    if (!(r_limit > 0.0))
        throw std::invalid_argument("saturated_number_within: r_limit must be > 0");
    auto integrand = [&](double r) {
        return saturation_density(profile.density(r), params).n_r;
    };
    return integrate_radial(integrand, r_limit, 1e-8, 8, 20000);
}

double initial_slope(const std::function<double(double)>& sampler, double saturation,
                     double tau_probe) {
    if (!(saturation > 0.0) || !(tau_probe > 0.0))
        throw std::invalid_argument("initial_slope: saturation and tau_probe must be > 0");
    const double half = 0.5 * saturation;

    // Pull the probe below the half-saturation crossing.
    int guard = 0;
    while (sampler(tau_probe) >= half) {
        tau_probe *= 0.5;
        if (++guard > 80)
            throw std::runtime_error(
                "initial_slope: curve already saturated at the first sample; "
                "use a finer time resolution");
    }
    // Grow until the crossing is bracketed, then bisect it.
    double lo = tau_probe, hi = tau_probe;
    guard = 0;
    while (sampler(hi) < half) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 80)
            throw std::runtime_error("initial_slope: curve never reaches half saturation");
    }
    for (int i = 0; i < 30; ++i) {
        const double mid = 0.5 * (lo + hi);
        (sampler(mid) < half ? lo : hi) = mid;
    }
    const double window = lo;

    // Origin-constrained least squares over >= 20 points in the window.
    const int points = 24;
    double num = 0.0, den = 0.0;
    for (int i = 1; i <= points; ++i) {
        const double t = window * i / points;
        num += t * sampler(t);
        den += t * t;
    }
    return num / den;
}

ExcitationCurve excitation_curve(const RadialProfile& profile, const BlockadeParams& params,
                                 std::span<const double> times, double atom_count) {
    ExcitationCurve curve;
    curve.times.assign(times.begin(), times.end());
    curve.n_r.reserve(times.size());
    for (double t : times) curve.n_r.push_back(rydberg_number(profile, params, t));
    if (atom_count > 0.0) {
        curve.f_total.reserve(times.size());
        for (double n : curve.n_r) curve.f_total.push_back(n / atom_count);
    }
    curve.n_sat = saturation_number(profile, params);
    const double omega_peak = saturation_density(profile.peak, params).omega_c;
    curve.slope = initial_slope(
        [&](double tau) { return rydberg_number(profile, params, tau); }, curve.n_sat,
        0.1 / omega_peak);
    curve.tau_s = curve.n_sat / curve.slope;
    return curve;
}

void AtomSchedule::validate() const {
    if (table.size() < 2)
        throw std::invalid_argument("AtomSchedule: need at least two table rows");
    for (size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].first > 0.0) || !(table[i].second >= 1.0))
            throw std::invalid_argument("AtomSchedule: temperatures and counts must be positive");
        if (i > 0 && table[i].first <= table[i - 1].first)
            throw std::invalid_argument("AtomSchedule: temperatures must be ascending");
    }
}

double AtomSchedule::atoms_at(double temperature) const {
    validate();
    if (temperature <= table.front().first) return table.front().second;
    if (temperature >= table.back().first) return table.back().second;
    for (size_t i = 1; i < table.size(); ++i) {
        if (temperature <= table[i].first) {
            const auto& [t0, n0] = table[i - 1];
            const auto& [t1, n1] = table[i];
            const double w = std::log(temperature / t0) / std::log(t1 / t0);
            return n0 * std::pow(n1 / n0, w);
        }
    }
    return table.back().second; // unreachable
}

SweepResult fraction_sweep(const TrapConfig& base_trap, const AtomSchedule& schedule,
                           const BlockadeParams& params,
                           std::span<const double> durations,
                           std::span<const double> temperatures,
                           bool clip_to_gas) {
    if (durations.empty() || temperatures.empty())
        throw std::invalid_argument("fraction_sweep: durations and temperatures must be non-empty");
    params.validate();
    schedule.validate();

    std::vector<double> temps(temperatures.begin(), temperatures.end());
    std::sort(temps.begin(), temps.end());

    SweepResult result;
    result.durations.assign(durations.begin(), durations.end());
    result.points.reserve(temps.size());

    for (double t : temps) {
        TrapConfig trap = base_trap;
        trap.atom_number = schedule.atoms_at(t);
        const GasState state = equilibrium_state(trap, t);
        const DensityProfile profile(trap, state);

        SweepPoint point;
        point.temperature = t;
        point.t_critical = state.t_critical;
        point.t_over_tc = t / state.t_critical;
        point.atom_number = trap.atom_number;
        point.condensate_fraction = state.condensate_fraction();
        point.peak_density_total = profile.peak_total();
        point.peak_density_thermal = profile.peak_thermal();

        const RadialProfile total = as_radial(profile);
        const RadialProfile thermal = thermal_radial(profile);
        for (double tau : durations) {
            point.f_total.push_back(rydberg_number(total, params, tau, clip_to_gas) /
                                    trap.atom_number);
            point.f_thermal_only.push_back(rydberg_number(thermal, params, tau, clip_to_gas) /
                                           trap.atom_number);
        }
        result.points.push_back(std::move(point));
    }
    return result;
}

std::vector<FamilyMember> gaussian_profile_family(double peak_min, double peak_max,
                                                  int count, double sigma) {
    if (count < 3 || !(peak_min > 0.0) || !(peak_max > peak_min) || !(sigma > 0.0))
        throw std::invalid_argument("gaussian_profile_family: bad family parameters");
    std::vector<FamilyMember> family;
    family.reserve(count);
    const double volume = std::pow(two_pi, 1.5) * sigma * sigma * sigma;
    for (int i = 0; i < count; ++i) {
        const double n0 = peak_min * std::pow(peak_max / peak_min, double(i) / (count - 1));
        FamilyMember m;
        m.profile = gaussian_profile(n0, sigma);
        m.peak_density = n0;
        m.atom_count = n0 * volume; // (2 pi)^(3/2) sigma^3 n0
        family.push_back(std::move(m));
    }
    return family;
}

RegimeExponents fraction_regime_exponents(const BlockadeParams& params,
                                          std::span<const FamilyMember> family,
                                          double tau_short, double tau_mid,
                                          double tau_long) {
    if (family.size() < 3)
        throw std::invalid_argument("fraction_regime_exponents: need >= 3 family members");
    double omega_max = 0.0;
    for (const auto& m : family)
        omega_max = std::max(omega_max, saturation_density(m.peak_density, params).omega_c);
    if (!(tau_short * omega_max < 0.2))
        throw std::invalid_argument(
            "fraction_regime_exponents: tau_short is not small against 1/Omega_c");

    auto fit_at = [&](double tau) {
        std::vector<std::pair<double, double>> samples;
        samples.reserve(family.size());
        for (const auto& m : family)
            samples.emplace_back(m.peak_density,
                                 rydberg_number(m.profile, params, tau) / m.atom_count);
        return fit_power_law(samples);
    };

    return {fit_at(tau_short), fit_at(tau_mid), fit_at(tau_long)};
}

RegimeTimes suggest_regime_times(const BlockadeParams& params,
                                 std::span<const FamilyMember> family) {
    double omega_max = 0.0;
    double log_tau_s = 0.0;
    double tau_s_max = 0.0;
    for (const auto& m : family) {
        omega_max = std::max(omega_max, saturation_density(m.peak_density, params).omega_c);
        const double n_sat = saturation_number(m.profile, params);
        const double omega_peak = saturation_density(m.peak_density, params).omega_c;
        const double slope = initial_slope(
            [&](double tau) { return rydberg_number(m.profile, params, tau); }, n_sat,
            0.1 / omega_peak);
        const double tau_s = n_sat / slope;
        log_tau_s += std::log(tau_s);
        tau_s_max = std::max(tau_s_max, tau_s);
    }
    const double tau_s_geo = std::exp(log_tau_s / double(family.size()));
    // 0.38 tau_s centres the linear stretch of the curve: the local density
    // exponent of f sweeps smoothly from 0 through -2/5 towards -4/5, and
    // this multiple lands on the -2/5 point stably across profile shapes.
    return {0.05 / omega_max, 0.38 * tau_s_geo, 30.0 * tau_s_max};
}

KinkVerdict detect_kink(const SweepResult& sweep, std::size_t duration_index,
                        double theta_rise, double theta_drop) {
    if (duration_index >= sweep.durations.size())
        throw std::out_of_range("detect_kink: duration index out of range");

    const auto& pts = sweep.points;
    std::vector<size_t> window;
    int below = -1; // warmest point with T <= 0.9 T_c
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].t_over_tc >= 1.0 && pts[i].t_over_tc <= 1.3) window.push_back(i);
        if (pts[i].t_over_tc <= 0.9) below = int(i);
    }
    KinkVerdict v;
    if (window.size() < 2 || below < 0) return v;

    auto f = [&](size_t i) { return pts[i].f_total[duration_index]; };
    size_t peak = window.front();
    for (size_t i : window)
        if (f(i) > f(peak)) peak = i;

    v.peak_t_over_tc = pts[peak].t_over_tc;
    v.rise = f(peak) / f(window.back()) - 1.0;
    v.drop = f(peak) / f(size_t(below)) - 1.0;
    v.rise_ok = v.rise >= theta_rise;
    v.drop_ok = v.drop >= theta_drop;
    v.detected = v.rise_ok && v.drop_ok;

    v.thermal_monotone = true;
    for (size_t k = 1; k + 1 < window.size(); ++k) {
        const double mid = pts[window[k]].f_thermal_only[duration_index];
        if (mid > pts[window[k - 1]].f_thermal_only[duration_index] * 1.005 &&
            mid > pts[window[k + 1]].f_thermal_only[duration_index] * 1.005)
            v.thermal_monotone = false;
    }
    return v;
}

int interior_local_maximum(std::span<const double> values, double rel_threshold) {
    for (size_t i = 1; i + 1 < values.size(); ++i) {
        const double left = values[i - 1];
        const double right = values[i + 1];
        if (values[i] > left * (1.0 + rel_threshold) &&
            values[i] > right * (1.0 + rel_threshold))
            return int(i);
    }
    return -1;
}

} // namespace rydsim
