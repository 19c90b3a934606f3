#include "rydsim/superatom_model.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace rydsim {

using namespace constants;

void LaserParams::validate() const {
    if (!(omega_1 > 0.0) || !(omega_2 > 0.0) || !(detuning > 0.0) || !(linewidth > 0.0))
        throw std::invalid_argument("LaserParams: all frequencies must be positive");
}

void BlockadeParams::validate() const {
    if (!(kappa > 0.0) || !(z_lattice > 0.0) || !(omega_0 > 0.0) || !(std::abs(c6) > 0.0))
        throw std::invalid_argument("BlockadeParams: kappa, Z, Omega0, |C6| must be positive");
}

BlockadeParams BlockadeParams::from_lasers(const LaserParams& lasers) {
    return from_lasers(lasers, BlockadeParams{});
}

BlockadeParams BlockadeParams::from_lasers(const LaserParams& lasers, BlockadeParams base) {
    if (!(base.rabi_reduction > 0.0))
        throw std::invalid_argument("BlockadeParams: rabi_reduction must be positive");
    base.omega_0 = two_photon_rabi(lasers) / base.rabi_reduction;
    return base;
}

double two_photon_rabi(const LaserParams& lasers) {
    if (lasers.detuning == 0.0)
        throw std::invalid_argument("two_photon_rabi: detuning must be nonzero");
    return lasers.omega_1 * lasers.omega_2 / (2.0 * lasers.detuning);
}

double scattering_probability(const LaserParams& lasers, double tau) {
    if (tau < 0.0) throw std::invalid_argument("scattering_probability: tau must be >= 0");
    const double ratio = lasers.omega_1 / (2.0 * lasers.detuning);
    return lasers.linewidth * ratio * ratio * tau;
}

LocalBlockade saturation_density(double n_g, const BlockadeParams& params) {
    if (n_g < 0.0) throw std::invalid_argument("saturation_density: n_g must be >= 0");
    params.validate();
    LocalBlockade lb;
    if (n_g == 0.0) return lb;

    const double c6_mag = std::abs(params.c6);
    lb.n_r = std::pow(2.0 * params.kappa * hbar / (params.z_lattice * c6_mag), 0.4) *
             std::pow(n_g, 0.2) * std::pow(params.omega_0, 0.4);
    lb.blockade_radius = blockade_radius_from_density(lb.n_r);
    lb.atoms_per_superatom = n_g / lb.n_r;
    lb.omega_c = std::sqrt(lb.atoms_per_superatom) * params.omega_0;
    lb.f_local_raw = lb.n_r / n_g;
    lb.f_local = std::min(1.0, lb.f_local_raw);
    return lb;
}

double blockade_radius_from_density(double n_r) {
    if (!(n_r > 0.0))
        throw std::invalid_argument("blockade_radius_from_density: n_R must be > 0");
    return std::cbrt(std::sqrt(2.0) / n_r);
}

double fcc_lattice_sum(int shells) {
    if (shells < 1) throw std::invalid_argument("fcc_lattice_sum: shells must be >= 1");

    // fcc sites are the cubic lattice points with even coordinate sum; the
    // nearest-neighbour squared distance is 2 in those units.
    int half_side = int(std::ceil(std::sqrt(4.0 * shells + 16.0)));
    for (;;) {
        const int max_norm = half_side * half_side;
        std::map<int, int> shell_counts; // norm^2 -> site count
        for (int i = -half_side; i <= half_side; ++i)
            for (int j = -half_side; j <= half_side; ++j)
                for (int k = -half_side; k <= half_side; ++k) {
                    if ((i + j + k) % 2 != 0) continue;
                    const int norm = i * i + j * j + k * k;
                    if (norm == 0 || norm > max_norm) continue;
                    ++shell_counts[norm];
                }
        if (int(shell_counts.size()) < shells) {
            half_side += 2;
            continue;
        }
        double sum = 0.0;
        int taken = 0;
        for (const auto& [norm, count] : shell_counts) {
            sum += count * std::pow(2.0 / norm, 3.0);
            if (++taken == shells) break;
        }
        return sum;
    }
}

} // namespace rydsim
