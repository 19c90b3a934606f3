#ifndef RYDSIM_SUPERATOM_MODEL_HPP
#define RYDSIM_SUPERATOM_MODEL_HPP

#include "rydsim/constants.hpp"
#include "rydsim/numerics.hpp"

namespace rydsim {

// Two-photon excitation lasers, 5S -> 5P -> 43S. Angular frequencies.
struct LaserParams {
    double omega_1 = constants::two_pi * 11.0e6;   // 5S-5P Rabi, rad/s
    double omega_2 = constants::two_pi * 9.7e6;    // 5P-43S Rabi, rad/s
    double detuning = constants::two_pi * 483.0e6; // blue detuning from 5P3/2 F=3
    double linewidth = constants::rb_5p_linewidth; // Gamma of 5P

    void validate() const; // throws; positivity plus far-detuned sanity
};

// Parameters of the blockade condition. The physical C6 is negative
// (repulsive 43S interactions); the condition uses its magnitude.
struct BlockadeParams {
    double c6 = c6_au_to_si(-1.7e19); // J m^6, signed
    double z_lattice = 14.5;          // fcc lattice-sum constant
    double kappa = 0.3;               // fit constant of order one
    double omega_0 = 0.0;             // effective two-photon Rabi, rad/s
    double rabi_reduction = 5.5;      // divisor applied to the bare Rabi

    // omega_0 = bare two-photon Rabi / rabi_reduction.
    static BlockadeParams from_lasers(const LaserParams& lasers);
    static BlockadeParams from_lasers(const LaserParams& lasers, BlockadeParams base);
    void validate() const;
};

// Saturated-blockade quantities at one point of the cloud.
struct LocalBlockade {
    double n_r = 0.0;            // saturation Rydberg density, m^-3
    double blockade_radius = 0.0;// m
    double atoms_per_superatom = 0.0;
    double omega_c = 0.0;        // collective Rabi frequency, rad/s
    double f_local = 0.0;        // 2 n_R / n_g... saturated fraction, clipped at 1
    double f_local_raw = 0.0;    // unclipped value
};

// Effective two-photon Rabi frequency Omega1 Omega2 / (2 Delta).
double two_photon_rabi(const LaserParams& lasers);

// Off-resonant photon scattering probability Gamma (Omega1 / 2 Delta)^2 tau.
double scattering_probability(const LaserParams& lasers, double tau);

// Local saturation density and collective Rabi frequency from the blockade
// condition, closed form.
LocalBlockade saturation_density(double n_g, const BlockadeParams& params);

// r_b = (sqrt(2) / n_R)^(1/3), the fcc close-packing identity.
double blockade_radius_from_density(double n_r);

// Sum of (d_nn / d)^6 over fcc lattice sites within the given number of
// coordination shells. First shell is exactly 12; converges to about 14.45.
double fcc_lattice_sum(int shells);

} // namespace rydsim

#endif
