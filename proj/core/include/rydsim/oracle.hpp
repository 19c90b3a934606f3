#ifndef RYDSIM_ORACLE_HPP
#define RYDSIM_ORACLE_HPP

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rydsim/constants.hpp"

namespace rydsim {

// Exact few-atom system: N two-level atoms at fixed positions with pairwise
// van der Waals interactions, evolved in the full 2^N product basis. This is
// the test oracle for the collective-enhancement assumption; it is exact and
// deliberately not scalable (N <= 14).
struct OracleSystem {
    std::vector<std::array<double, 3>> positions; // m
    double omega_0 = 0.0; // bare Rabi frequency, rad/s
    double c6 = 0.0;      // J m^6, signed; |c6| enters with repulsive sign

    int n_atoms() const { return int(positions.size()); }
    int dim() const { return 1 << positions.size(); }
    double pair_energy(int i, int j) const; // |C6| / d^6, J
    void validate() const;
};

// H = (hbar Omega0 / 2) sum_i sigma_x^i + sum_{i<j} V_ij n_i n_j at zero
// detuning, in the product basis (bit i set = atom i excited).
Eigen::MatrixXd build_hamiltonian(const OracleSystem& system);

struct EvolutionResult {
    std::vector<double> times;
    std::vector<double> norms;            // should stay at 1
    std::vector<double> total_excitation; // <sum_i n_i>(t)
    std::vector<double> p_single;         // one-excitation probability
    std::vector<double> p_double;         // two-excitation probability
    std::vector<double> energy;           // <H>(t), J
    double extracted_frequency = 0.0;     // rad/s, dominant line of <sum n_i>
    double max_total_excitation = 0.0;
    // Largest spread of amplitudes within a permutation orbit (equal-popcount
    // class); meaningful only for fully symmetric position configurations.
    double max_symmetry_deviation = 0.0;
};

// Unitary propagation from the all-ground state by spectral decomposition,
// sampled uniformly on [0, t_max]. Throws on norm drift beyond 1e-6.
EvolutionResult evolve(const OracleSystem& system, double t_max, int samples);

// Dominant nonzero frequency of a uniformly sampled real series: coarse
// windowed-DFT peak, then continuous refinement around the peak bin.
double extract_frequency(std::span<const double> times, std::span<const double> values);

struct CrossoverRow {
    double distance = 0.0;   // m
    double frequency = 0.0;  // extracted oscillation frequency, rad/s
    double max_double = 0.0; // max probability of both atoms excited
};

// Two-atom blockade crossover versus separation.
std::vector<CrossoverRow> blockade_crossover(double omega_0, double c6,
                                             std::span<const double> distances,
                                             int samples = 1024);

// Separation at which |C6| / d^6 = hbar sqrt(2) Omega0, the two-atom
// analytic blockade radius.
double pair_blockade_radius(double omega_0, double c6);

// Random cluster of n atoms tight enough that every pair interaction exceeds
// 1000 hbar sqrt(n) Omega0 (the strong-blockade regime). Deterministic for a
// given seed.
std::vector<std::array<double, 3>> strong_blockade_positions(int n, double omega_0,
                                                             double c6,
                                                             std::uint64_t seed);

} // namespace rydsim

#endif
