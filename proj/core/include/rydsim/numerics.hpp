#ifndef RYDSIM_NUMERICS_HPP
#define RYDSIM_NUMERICS_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rydsim/constants.hpp"

namespace rydsim {

// Thrown when the adaptive quadrature cannot reach the requested tolerance.
// Carries the best estimate so callers can decide whether to accept it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate(estimate), error_bound(error_bound) {}
    double estimate;
    double error_bound;
};

// Bose-Einstein polylogarithm Li_s(z) = sum_{k>=1} z^k / k^s for s > 1 and
// z in [0, 1]. Relative accuracy 1e-10 or better over the whole domain.
double polylog(double s, double z);

// Riemann zeta, re-exported for the z = 1 limits used by the gas model.
double riemann_zeta(double s);

// Integral of f(r) * 4 pi r^2 dr over [0, r_max] by globally adaptive
// Gauss-Kronrod (G7, K15) subdivision. `initial_segments` pre-splits the
// range; callers integrating oscillatory profiles should pass roughly one
// segment per half period of the integrand.
double integrate_radial(const std::function<double(double)>& f, double r_max,
                        double rel_tol = 1e-8, int initial_segments = 1,
                        int max_subdivisions = 4000);

// Root of a monotone (or at least sign-changing) function on [lo, hi],
// bisection with secant acceleration, relative tolerance 1e-12.
double solve_monotone(const std::function<double(double)>& g, double lo, double hi,
                      double rel_tol = 1e-12);

struct PowerLawFit {
    double exponent = 0.0;  // slope in log-log space
    double prefactor = 0.0; // y at x = 1
    double residual = 0.0;  // RMS residual in log space

    double predict(double x) const;
};

// Least-squares straight line through (log x, log y). All samples must be
// positive and there must be at least three of them.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples);

inline double c6_au_to_si(double c6_au) { return c6_au * constants::c6_atomic_unit; }
inline double c6_si_to_au(double c6_si) { return c6_si / constants::c6_atomic_unit; }

} // namespace rydsim

#endif
