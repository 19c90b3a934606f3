#include "rydsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include <lapacke.h>

namespace rydsim {

using namespace constants;

double OracleSystem::pair_energy(int i, int j) const {
    const auto& a = positions[i];
    const auto& b = positions[j];
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    const double d2 = dx * dx + dy * dy + dz * dz;
    if (!(d2 > 0.0))
        throw std::invalid_argument("OracleSystem: coincident atom positions");
    return std::abs(c6) / (d2 * d2 * d2);
}

void OracleSystem::validate() const {
    if (positions.empty()) throw std::invalid_argument("OracleSystem: no atoms");
    if (n_atoms() > 14)
        throw std::length_error("OracleSystem: at most 14 atoms supported");
    if (!(omega_0 > 0.0))
        throw std::invalid_argument("OracleSystem: Omega0 must be positive");
    for (int i = 0; i < n_atoms(); ++i)
        for (int j = i + 1; j < n_atoms(); ++j)
            pair_energy(i, j); // throws on coincident positions
}

Eigen::MatrixXd build_hamiltonian(const OracleSystem& system) {
    system.validate();
    const int n = system.n_atoms();
    const int dim = system.dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    const double drive = 0.5 * hbar * system.omega_0;
    for (int s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!(s >> i & 1)) continue;
            for (int j = i + 1; j < n; ++j)
                if (s >> j & 1) diag += system.pair_energy(i, j);
        }
        h(s, s) = diag;
        for (int i = 0; i < n; ++i) h(s ^ (1 << i), s) = drive;
    }
    return h;
}

namespace {

struct Spectrum {
    Eigen::MatrixXd vectors; // columns are eigenvectors
    Eigen::VectorXd values;  // J
};

Spectrum diagonalize(Eigen::MatrixXd h) {
    const int dim = int(h.rows());
    Eigen::VectorXd w(dim);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', dim, h.data(), dim,
                                    w.data());
    if (info != 0) throw std::runtime_error("oracle: eigensolver failed");
    return {std::move(h), std::move(w)};
}

} // namespace

EvolutionResult evolve(const OracleSystem& system, double t_max, int samples) {
    if (samples < 2) throw std::invalid_argument("evolve: need at least 2 samples");
    if (!(t_max > 0.0)) throw std::invalid_argument("evolve: t_max must be positive");

    const Eigen::MatrixXd h = build_hamiltonian(system);
    const Spectrum spec = diagonalize(h);
    const int dim = system.dim();

    // Initial state |g...g> is basis index 0.
    const Eigen::VectorXd coeff = spec.vectors.row(0).transpose();

    EvolutionResult res;
    res.times.resize(samples);
    res.norms.resize(samples);
    res.total_excitation.resize(samples);
    res.p_single.resize(samples);
    res.p_double.resize(samples);
    res.energy.resize(samples);

    Eigen::VectorXd a(dim), b(dim), re(dim), im(dim);
    for (int k = 0; k < samples; ++k) {
        const double t = t_max * k / (samples - 1);
        for (int m = 0; m < dim; ++m) {
            const double phase = spec.values[m] * t / hbar;
            a[m] = coeff[m] * std::cos(phase);
            b[m] = -coeff[m] * std::sin(phase);
        }
        re.noalias() = spec.vectors * a;
        im.noalias() = spec.vectors * b;

        double norm2 = 0.0, excit = 0.0, p1 = 0.0, p2 = 0.0;
        for (int s = 0; s < dim; ++s) {
            const double p = re[s] * re[s] + im[s] * im[s];
            const int bits = std::popcount(unsigned(s));
            norm2 += p;
            excit += bits * p;
            if (bits == 1) p1 += p;
            if (bits == 2) p2 += p;
        }
        res.times[k] = t;
        res.norms[k] = std::sqrt(norm2);
        res.total_excitation[k] = excit;
        res.p_single[k] = p1;
        res.p_double[k] = p2;
        res.energy[k] = re.dot(h * re) + im.dot(h * im);
        res.max_total_excitation = std::max(res.max_total_excitation, excit);

        if (std::abs(res.norms[k] - 1.0) > 1e-6)
            throw std::runtime_error("evolve: norm drift exceeds 1e-6");

        // Spread of amplitudes within each equal-popcount permutation orbit.
        const int n = system.n_atoms();
        for (int bits = 0; bits <= n; ++bits) {
            double sum_re = 0.0, sum_im = 0.0;
            int count = 0;
            for (int s = 0; s < dim; ++s)
                if (std::popcount(unsigned(s)) == bits) {
                    sum_re += re[s];
                    sum_im += im[s];
                    ++count;
                }
            const double mean_re = sum_re / count, mean_im = sum_im / count;
            for (int s = 0; s < dim; ++s)
                if (std::popcount(unsigned(s)) == bits) {
                    const double dr = re[s] - mean_re, di = im[s] - mean_im;
                    res.max_symmetry_deviation =
                        std::max(res.max_symmetry_deviation, std::sqrt(dr * dr + di * di));
                }
        }
    }

    res.extracted_frequency = extract_frequency(res.times, res.total_excitation);
    return res;
}

namespace {

// Hann-windowed spectral amplitude at angular frequency omega.
double windowed_amplitude(std::span<const double> times, std::span<const double> values,
                         double mean, double omega) {
    const size_t n = times.size();
    double sr = 0.0, si = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double w = 0.5 - 0.5 * std::cos(two_pi * j / (n - 1));
        const double x = (values[j] - mean) * w;
        sr += x * std::cos(omega * times[j]);
        si -= x * std::sin(omega * times[j]);
    }
    return sr * sr + si * si;
}

} // namespace

double extract_frequency(std::span<const double> times, std::span<const double> values) {
    const size_t n = times.size();
    if (n < 8 || values.size() != n)
        throw std::invalid_argument("extract_frequency: need >= 8 matched samples");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= double(n);

    const double span = times.back() - times.front();
    const double domega = two_pi / span;

    // Coarse scan over the DFT grid, skipping the DC bin.
    double best = 0.0;
    size_t best_k = 1;
    for (size_t k = 1; k <= n / 2; ++k) {
        const double a = windowed_amplitude(times, values, mean, k * domega);
        if (a > best) {
            best = a;
            best_k = k;
        }
    }

    // Golden-section refinement around the peak bin.
    double lo = (best_k > 1 ? best_k - 1 : 0.5) * domega;
    double hi = (best_k + 1) * domega;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = windowed_amplitude(times, values, mean, x1);
    double f2 = windowed_amplitude(times, values, mean, x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = windowed_amplitude(times, values, mean, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = windowed_amplitude(times, values, mean, x1);
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<CrossoverRow> blockade_crossover(double omega_0, double c6,
                                             std::span<const double> distances,
                                             int samples) {
    std::vector<CrossoverRow> rows;
    rows.reserve(distances.size());
    for (double d : distances) {
        OracleSystem sys;
        sys.omega_0 = omega_0;
        sys.c6 = c6;
        sys.positions = {{0.0, 0.0, 0.0}, {d, 0.0, 0.0}};
        // Long enough to resolve both the bare and the sqrt(2)-enhanced line.
        const double t_max = 24.0 * two_pi / omega_0;
        EvolutionResult evo = evolve(sys, t_max, samples);
        double max_p2 = 0.0;
        for (double p : evo.p_double) max_p2 = std::max(max_p2, p);
        rows.push_back({d, evo.extracted_frequency, max_p2});
    }
    return rows;
}

std::vector<std::array<double, 3>> strong_blockade_positions(int n, double omega_0,
                                                             double c6,
                                                             std::uint64_t seed) {
    if (n < 1 || n > 14)
        throw std::invalid_argument("strong_blockade_positions: n must be in [1, 14]");
    // Largest pair separation keeping V >= 1000 hbar sqrt(n) Omega0.
    const double d_max =
        std::pow(std::abs(c6) / (1000.0 * hbar * std::sqrt(double(n)) * omega_0), 1.0 / 6.0);
    const double ball = 0.5 * d_max;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-ball, ball);
    std::vector<std::array<double, 3>> positions;
    while (int(positions.size()) < n) {
        std::array<double, 3> p{uni(rng), uni(rng), uni(rng)};
        if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] > ball * ball) continue;
        bool ok = true;
        for (const auto& q : positions) {
            const double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
            if (dx * dx + dy * dy + dz * dz < 0.01 * d_max * d_max) {
                ok = false; // keep the spread of pair energies bounded
                break;
            }
        }
        if (ok) positions.push_back(p);
    }
    return positions;
}

double pair_blockade_radius(double omega_0, double c6) {
    if (!(omega_0 > 0.0) || !(std::abs(c6) > 0.0))
        throw std::invalid_argument("pair_blockade_radius: need positive Omega0 and |C6|");
    return std::pow(std::abs(c6) / (hbar * std::sqrt(2.0) * omega_0), 1.0 / 6.0);
}

} // namespace rydsim
