#ifndef RYDSIM_GAS_MODEL_HPP
#define RYDSIM_GAS_MODEL_HPP

#include <cmath>

#include "rydsim/constants.hpp"

namespace rydsim {

// Harmonic trap plus species data. The anisotropic trap enters all
// downstream integrals only through the geometric mean frequency, so the
// density profiles are evaluated in the isotropized radial coordinate.
struct TrapConfig {
    double omega_x = constants::two_pi * 360.0; // rad/s
    double omega_y = constants::two_pi * 360.0;
    double omega_z = constants::two_pi * 71.0;
    double scattering_length = 98.0 * constants::bohr_radius; // m
    double mass = constants::rb87_mass;                       // kg
    double atom_number = 4.0e5;

    double omega_bar() const { return std::cbrt(omega_x * omega_y * omega_z); }
    double oscillator_length() const; // sqrt(hbar / (m omega_bar))
    void validate() const;            // throws std::invalid_argument
};

// Equilibrium of the ideal Bose gas in the trap at temperature T, with the
// Thomas-Fermi chemical potential attached once a condensate exists.
struct GasState {
    double temperature = 0.0;  // K
    double fugacity = 0.0;     // in [0, 1]
    double chemical_potential = 0.0; // J, 0 without condensate
    double n_thermal = 0.0;
    double n_condensate = 0.0;
    double t_critical = 0.0;   // K, for this trap and atom number

    double condensate_fraction() const {
        return n_condensate / (n_thermal + n_condensate);
    }
};

// Bimodal in-trap density: Bose-enhanced thermal part plus Thomas-Fermi
// condensate. Immutable after construction; evaluation is pure.
class DensityProfile {
public:
    DensityProfile(const TrapConfig& trap, const GasState& state);

    double thermal(double r) const;
    double condensate(double r) const;
    double total(double r) const { return thermal(r) + condensate(r); }

    double peak_thermal() const { return peak_thermal_; }
    double peak_condensate() const { return peak_condensate_; }
    double peak_total() const { return peak_thermal_ + peak_condensate_; }

    double tf_radius() const { return tf_radius_; } // 0 without condensate
    double r_max() const { return r_max_; }         // V(r_max) = 40 k_B T

    const TrapConfig& trap() const { return trap_; }
    const GasState& state() const { return state_; }

    // Same thermal cloud, condensate zeroed; used for the dashed
    // thermal-only comparison curves.
    DensityProfile thermal_only() const;

private:
    TrapConfig trap_;
    GasState state_;
    double lambda_db_;        // thermal de Broglie wavelength
    double half_m_omega_sq_;  // 0.5 m omega_bar^2
    double g_int_;            // 4 pi hbar^2 a / m
    double tf_radius_;
    double r_max_;
    double peak_thermal_;
    double peak_condensate_;
};

// T_c of the ideal gas in a harmonic trap.
double critical_temperature(const TrapConfig& trap);

// Fugacity / chemical potential / component numbers at temperature T.
GasState equilibrium_state(const TrapConfig& trap, double temperature);

inline DensityProfile density_profile(const TrapConfig& trap, const GasState& state) {
    return DensityProfile(trap, state);
}

// Average nearest-neighbour distance 0.55 n^(-1/3).
double nearest_neighbour_distance(double density);

// Thermal de Broglie wavelength h / sqrt(2 pi m k_B T).
double debroglie_wavelength(double temperature, double mass = constants::rb87_mass);

} // namespace rydsim

#endif
