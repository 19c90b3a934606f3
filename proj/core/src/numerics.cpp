#include "rydsim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <boost/math/special_functions/zeta.hpp>

namespace rydsim {

double riemann_zeta(double s) { return boost::math::zeta(s); }

namespace {

// Direct series with the geometric tail bound z^{K+1} / ((K+1)^s (1-z)).
double polylog_series(double s, double z, double rel_tol) {
    double sum = 0.0;
    double zk = 1.0;
    for (int k = 1; k <= 2000000; ++k) {
        zk *= z;
        const double term = zk * std::exp(-s * std::log(double(k)));
        sum += term;
        if (k > 2) {
            const double tail = term * z / (1.0 - z);
            if (tail <= rel_tol * sum) return sum;
        }
    }
    return sum; // unreachable for the z <= threshold used below
}

// Expansion around z = 1 with alpha = -ln z, valid for alpha < 2 pi:
//   Li_s(e^-a) = Gamma(1-s) a^(s-1) + sum_k zeta(s-k) (-a)^k / k!   (s not integer)
//   Li_n(e^-a) = (-a)^(n-1)/(n-1)! (H_{n-1} - ln a) + sum_{k != n-1} zeta(n-k) (-a)^k / k!
double polylog_near_one(double s, double alpha) {
    const double sr = std::round(s);
    const bool integer_s = std::abs(s - sr) < 1e-9;

    double sum = 0.0;
    if (integer_s) {
        const int n = int(sr);
        double fact = 1.0;   // (n-1)!
        double harmonic = 0.0;
        for (int j = 1; j < n; ++j) {
            fact *= j;
            harmonic += 1.0 / j;
        }
        const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
        sum = sign * std::pow(alpha, n - 1) / fact * (harmonic - std::log(alpha));
    } else {
        sum = std::tgamma(1.0 - s) * std::pow(alpha, s - 1.0);
    }

    double ak = 1.0;         // (-alpha)^k / k!
    double prev_term = 1e300;
    for (int k = 0; k <= 80; ++k) {
        if (k > 0) ak *= -alpha / k;
        if (integer_s && k == int(sr) - 1) continue; // zeta(1) pole handled above
        const double term = boost::math::zeta(s - k) * ak;
        sum += term;
        // Two consecutive tiny terms: zeta's trivial zeros at negative even
        // integers make single terms vanish long before the tail does.
        if (k > 3 && std::abs(term) < 1e-16 * std::abs(sum) &&
            std::abs(prev_term) < 1e-16 * std::abs(sum))
            break;
        prev_term = term;
    }
    return sum;
}

} // namespace

double polylog(double s, double z) {
    if (z < 0.0 || z > 1.0) throw std::domain_error("polylog: z must lie in [0, 1]");
    if (s <= 1.0 && z == 1.0) throw std::domain_error("polylog: series diverges for s <= 1 at z = 1");
    if (s <= 1.0) throw std::domain_error("polylog: s must be > 1");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return boost::math::zeta(s);
    if (z > 0.8) return polylog_near_one(s, -std::log(z));
    return polylog_series(s, z, 1e-12);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kron_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kron_w[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double gauss_w[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const {
        if (error != o.error) return error < o.error;
        return a < o.a; // deterministic tie-break
    }
};

Segment gauss_kronrod(const std::function<double(double)>& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = g(c - h * kron_x[i]);
        fv[14 - i] = g(c + h * kron_x[i]);
    }
    fv[7] = g(c);
    double kron = 0.0;
    for (int i = 0; i < 8; ++i) kron += kron_w[i] * (i == 7 ? fv[7] : fv[i] + fv[14 - i]);
    double gau = gauss_w[3] * fv[7];
    for (int i = 0; i < 3; ++i) gau += gauss_w[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    kron *= h;
    gau *= h;
    return {a, b, kron, std::abs(kron - gau)};
}

} // namespace

double integrate_radial(const std::function<double(double)>& f, double r_max,
                        double rel_tol, int initial_segments, int max_subdivisions) {
    if (!(r_max > 0.0)) throw std::invalid_argument("integrate_radial: r_max must be > 0");
    initial_segments = std::clamp(initial_segments, 1, max_subdivisions);

    auto g = [&f](double r) { return 4.0 * constants::pi * r * r * f(r); };

    std::priority_queue<Segment> heap;
    double total = 0.0, err = 0.0;
    for (int i = 0; i < initial_segments; ++i) {
        Segment s = gauss_kronrod(g, r_max * i / initial_segments,
                                  r_max * (i + 1) / initial_segments);
        total += s.value;
        err += s.error;
        heap.push(s);
    }

    int used = initial_segments;
    while (err > rel_tol * std::max(std::abs(total), 1e-300) && err > 1e-300) {
        if (used >= max_subdivisions) {
            throw QuadratureError("integrate_radial: no convergence after max subdivisions",
                                  total, err);
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod(g, worst.a, mid);
        Segment right = gauss_kronrod(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    return total;
}

double solve_monotone(const std::function<double(double)>& g, double lo, double hi,
                      double rel_tol) {
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("solve_monotone: no sign change on [lo, hi]");

    for (int it = 0; it < 200; ++it) {
        // Secant candidate, falling back to bisection when it leaves the bracket.
        double mid = lo + (hi - lo) * (-flo) / (fhi - flo);
        const double width = hi - lo;
        if (!(mid > lo + 0.01 * width) || !(mid < hi - 0.01 * width))
            mid = 0.5 * (lo + hi);
        const double fmid = g(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo <= rel_tol * std::max({std::abs(lo), std::abs(hi), 1e-300}))
            break;
    }
    return 0.5 * (lo + hi);
}

double PowerLawFit::predict(double x) const {
    return prefactor * std::pow(x, exponent);
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("fit_power_law: need at least 3 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(samples.size());
    for (const auto& [x, y] : samples) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("fit_power_law: samples must be positive");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_power_law: degenerate abscissae");
    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.exponent * sx) / n;
    fit.prefactor = std::exp(intercept);
    double ss = 0.0;
    for (const auto& [x, y] : samples) {
        const double r = std::log(y) - (intercept + fit.exponent * std::log(x));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

} // namespace rydsim
