#include "rydsim/gas_model.hpp"

#include <stdexcept>

#include "rydsim/numerics.hpp"

namespace rydsim {

using namespace constants;

double TrapConfig::oscillator_length() const {
    return std::sqrt(hbar / (mass * omega_bar()));
}

void TrapConfig::validate() const {
    if (!(omega_x > 0.0) || !(omega_y > 0.0) || !(omega_z > 0.0))
        throw std::invalid_argument("TrapConfig: trap frequencies must be positive");
    if (!(scattering_length > 0.0))
        throw std::invalid_argument("TrapConfig: scattering length must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("TrapConfig: mass must be positive");
    if (!(atom_number >= 1.0))
        throw std::invalid_argument("TrapConfig: atom number must be at least 1");
}

double critical_temperature(const TrapConfig& trap) {
    trap.validate();
    const double zeta3 = riemann_zeta(3.0);
    return hbar * trap.omega_bar() / k_boltzmann *
           std::cbrt(trap.atom_number / zeta3);
}

GasState equilibrium_state(const TrapConfig& trap, double temperature) {
    trap.validate();
    if (!(temperature > 0.0))
        throw std::invalid_argument("equilibrium_state: temperature must be > 0");

    GasState st;
    st.temperature = temperature;
    st.t_critical = critical_temperature(trap);

    // Number of thermal atoms a saturated (z = 1) cloud can hold at T.
    const double cubes = std::pow(k_boltzmann * temperature / (hbar * trap.omega_bar()), 3);
    const double n_saturated = riemann_zeta(3.0) * cubes;

    if (n_saturated >= trap.atom_number) {
        // No condensate: solve g3(z) = N (hbar w / kT)^3 for the fugacity.
        const double target = trap.atom_number / cubes;
        st.fugacity = solve_monotone(
            [target](double z) { return (z == 0.0 ? 0.0 : polylog(3.0, z)) - target; },
            0.0, 1.0);
        st.chemical_potential = 0.0;
        st.n_thermal = trap.atom_number;
        st.n_condensate = 0.0;
    } else {
        st.fugacity = 1.0;
        st.n_thermal = n_saturated;
        st.n_condensate = trap.atom_number - n_saturated;
        // Thomas-Fermi chemical potential of the condensate.
        const double abar = trap.oscillator_length();
        st.chemical_potential =
            0.5 * hbar * trap.omega_bar() *
            std::pow(15.0 * st.n_condensate * trap.scattering_length / abar, 0.4);
    }
    return st;
}

DensityProfile::DensityProfile(const TrapConfig& trap, const GasState& state)
    : trap_(trap), state_(state) {
    trap_.validate();
    lambda_db_ = debroglie_wavelength(state.temperature, trap.mass);
    const double wb = trap.omega_bar();
    half_m_omega_sq_ = 0.5 * trap.mass * wb * wb;
    g_int_ = 4.0 * pi * hbar * hbar * trap.scattering_length / trap.mass;

    tf_radius_ = state.n_condensate > 0.0
                     ? std::sqrt(state.chemical_potential / half_m_omega_sq_)
                     : 0.0;
    // Density tail beyond V = 40 kT is below 1e-17 of the peak.
    r_max_ = std::sqrt(40.0 * k_boltzmann * state.temperature / half_m_omega_sq_);

    peak_thermal_ = thermal(0.0);
    peak_condensate_ = condensate(0.0);
}

double DensityProfile::thermal(double r) const {
    const double arg = state_.fugacity *
        std::exp(-half_m_omega_sq_ * r * r / (k_boltzmann * state_.temperature));
    if (arg <= 0.0) return 0.0;
    return polylog(1.5, arg) / (lambda_db_ * lambda_db_ * lambda_db_);
}

double DensityProfile::condensate(double r) const {
    if (state_.n_condensate <= 0.0) return 0.0;
    const double v = half_m_omega_sq_ * r * r;
    return std::max(0.0, state_.chemical_potential - v) / g_int_;
}

DensityProfile DensityProfile::thermal_only() const {
    DensityProfile p = *this;
    p.state_.n_condensate = 0.0;
    p.state_.chemical_potential = 0.0;
    p.tf_radius_ = 0.0;
    p.peak_condensate_ = 0.0;
    return p;
}

double nearest_neighbour_distance(double density) {
    if (!(density > 0.0))
        throw std::invalid_argument("nearest_neighbour_distance: density must be > 0");
    return 0.55 * std::pow(density, -1.0 / 3.0);
}

double debroglie_wavelength(double temperature, double mass) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("debroglie_wavelength: temperature must be > 0");
    return planck / std::sqrt(two_pi * mass * k_boltzmann * temperature);
}

} // namespace rydsim
