#ifndef RYDSIM_CONSTANTS_HPP
#define RYDSIM_CONSTANTS_HPP

// Physical constants (CODATA 2018) and the unit conversions used throughout.
// All frequencies in this codebase are angular frequencies in rad/s; config
// files and the CLI accept plain Hz and convert on ingest.

namespace rydsim::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double planck = 6.62607015e-34;         // J s
inline constexpr double k_boltzmann = 1.380649e-23;      // J/K
inline constexpr double bohr_radius = 5.29177210903e-11; // m
inline constexpr double hartree = 4.3597447222071e-18;   // J

inline constexpr double rb87_mass = 1.44316060e-25;      // kg

// Natural linewidth of the Rb 5P3/2 state.
inline constexpr double rb_5p_linewidth = two_pi * 6.0666e6; // rad/s

// C6 conversion: one atomic unit of C6 is E_h * a0^6.
inline constexpr double c6_atomic_unit =
    hartree * bohr_radius * bohr_radius * bohr_radius *
    bohr_radius * bohr_radius * bohr_radius;             // J m^6

} // namespace rydsim::constants

#endif
