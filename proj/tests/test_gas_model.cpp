#include <doctest.h>

#include <cmath>
#include <random>

#include "rydsim/excitation.hpp"
#include "rydsim/gas_model.hpp"
#include "rydsim/numerics.hpp"

using namespace rydsim;
using namespace rydsim::constants;
using doctest::Approx;

TEST_CASE("critical temperature formula and scaling") {
    TrapConfig trap;
    trap.omega_x = trap.omega_y = trap.omega_z = two_pi * 100.0;
    trap.atom_number = 1e6;
    // T_c = (hbar w / k_B) (N / zeta(3))^(1/3), evaluated independently.
    const double expected =
        hbar * two_pi * 100.0 / k_boltzmann * std::cbrt(1e6 / riemann_zeta(3.0));
    CHECK(critical_temperature(trap) == Approx(expected).epsilon(1e-12));
    CHECK(critical_temperature(trap) == Approx(451e-9).epsilon(0.01));

    TrapConfig bigger = trap;
    bigger.atom_number = 8e6;
    CHECK(critical_temperature(bigger) ==
          Approx(2.0 * critical_temperature(trap)).epsilon(1e-12));
}

TEST_CASE("default preset condenses near 700 nK") {
    TrapConfig trap; // 2 pi x {360, 360, 71} Hz, 4e5 atoms
    CHECK(trap.omega_bar() == Approx(two_pi * std::cbrt(360.0 * 360.0 * 71.0)).epsilon(1e-12));
    CHECK(critical_temperature(trap) == Approx(700e-9).epsilon(0.02));
}

TEST_CASE("equilibrium state across the transition") {
    TrapConfig trap;
    const double tc = critical_temperature(trap);

    SUBCASE("continuity at T_c") {
        const GasState at = equilibrium_state(trap, tc);
        CHECK(at.fugacity == Approx(1.0).epsilon(1e-6));
        CHECK(at.n_condensate / trap.atom_number == Approx(0.0).scale(1.0).epsilon(1e-6));
    }
    SUBCASE("ideal-gas condensate fraction below T_c") {
        const GasState s = equilibrium_state(trap, 0.5 * tc);
        CHECK(s.condensate_fraction() == Approx(1.0 - 0.125).epsilon(1e-9));
        CHECK(s.fugacity == 1.0);
        CHECK(s.chemical_potential > 0.0);
        for (double frac : {0.3, 0.6, 0.9}) {
            const GasState g = equilibrium_state(trap, frac * tc);
            CHECK(g.condensate_fraction() ==
                  Approx(1.0 - frac * frac * frac).epsilon(1e-9));
        }
    }
    SUBCASE("fugacity round-trip above T_c") {
        const GasState s = equilibrium_state(trap, 2.0 * tc);
        CHECK(s.fugacity < 1.0);
        CHECK(s.n_condensate == 0.0);
        CHECK(s.chemical_potential == 0.0);
        const double ratio = k_boltzmann * 2.0 * tc / (hbar * trap.omega_bar());
        CHECK(polylog(3.0, s.fugacity) * ratio * ratio * ratio ==
              Approx(trap.atom_number).epsilon(1e-9));
    }
    SUBCASE("component numbers always close") {
        for (double t : {0.4 * tc, 0.9 * tc, 1.1 * tc, 3.0 * tc}) {
            const GasState s = equilibrium_state(trap, t);
            CHECK(s.n_thermal + s.n_condensate == Approx(trap.atom_number).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(equilibrium_state(trap, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_state(trap, -1e-9), std::invalid_argument);
}

TEST_CASE("density profile closed forms") {
    TrapConfig trap;
    const double tc = critical_temperature(trap);

    SUBCASE("peak thermal density above T_c") {
        const GasState s = equilibrium_state(trap, 1.5 * tc);
        const DensityProfile p(trap, s);
        const double lam = debroglie_wavelength(1.5 * tc, trap.mass);
        CHECK(p.thermal(0.0) ==
              Approx(polylog(1.5, s.fugacity) / (lam * lam * lam)).epsilon(1e-9));
        CHECK(p.condensate(0.0) == 0.0);
        CHECK(p.tf_radius() == 0.0);
        // Peak phase-space density below the critical value.
        CHECK(p.thermal(0.0) * lam * lam * lam < riemann_zeta(1.5));
    }
    SUBCASE("critical phase-space density at T_c") {
        const GasState s = equilibrium_state(trap, tc);
        const DensityProfile p(trap, s);
        const double lam = debroglie_wavelength(tc, trap.mass);
        CHECK(p.thermal(0.0) * lam * lam * lam == Approx(riemann_zeta(1.5)).epsilon(1e-6));
    }
    SUBCASE("Thomas-Fermi condensate has compact support") {
        const GasState s = equilibrium_state(trap, 0.5 * tc);
        const DensityProfile p(trap, s);
        const double r_tf = p.tf_radius();
        CHECK(r_tf == Approx(std::sqrt(2.0 * s.chemical_potential /
                                       (trap.mass * trap.omega_bar() * trap.omega_bar())))
                          .epsilon(1e-12));
        CHECK(p.condensate(0.0) > 0.0);
        CHECK(p.condensate(1.0001 * r_tf) == 0.0);
        // Inverted parabola: half the peak at r_tf / sqrt(2).
        CHECK(p.condensate(r_tf / std::sqrt(2.0)) ==
              Approx(0.5 * p.condensate(0.0)).epsilon(1e-9));
    }
    SUBCASE("density is non-increasing in r") {
        for (double t : {0.4 * tc, 1.2 * tc}) {
            const DensityProfile p(trap, equilibrium_state(trap, t));
            double prev = p.total(0.0);
            for (int i = 1; i <= 60; ++i) {
                const double n = p.total(p.r_max() * i / 60.0);
                CHECK(n <= prev * (1.0 + 1e-12));
                prev = n;
            }
        }
    }
}

TEST_CASE("density profiles integrate to the component atom numbers") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> log_n(std::log(5e4), std::log(5e6));
    std::uniform_real_distribution<double> freq(50.0, 500.0);
    std::uniform_real_distribution<double> t_rel(0.3, 2.5);

    for (int trial = 0; trial < 20; ++trial) {
        TrapConfig trap;
        trap.omega_x = two_pi * freq(rng);
        trap.omega_y = two_pi * freq(rng);
        trap.omega_z = two_pi * freq(rng);
        trap.atom_number = std::exp(log_n(rng));
        const double t = t_rel(rng) * critical_temperature(trap);
        const GasState s = equilibrium_state(trap, t);
        const DensityProfile p(trap, s);

        const double n_th = integrate_radial([&](double r) { return p.thermal(r); },
                                             p.r_max(), 1e-10, 16);
        CHECK(n_th == Approx(s.n_thermal).epsilon(1e-6));
        if (s.n_condensate > 0.0) {
            const double n_bec = integrate_radial([&](double r) { return p.condensate(r); },
                                                  p.r_max(), 1e-10, 16);
            CHECK(n_bec == Approx(s.n_condensate).epsilon(1e-6));
        }
    }
}

TEST_CASE("thermal-only profile zeroes the condensate and keeps the thermal part") {
    TrapConfig trap;
    const double tc = critical_temperature(trap);
    const DensityProfile p(trap, equilibrium_state(trap, 0.6 * tc));
    const DensityProfile th = p.thermal_only();
    CHECK(th.peak_condensate() == 0.0);
    CHECK(th.thermal(0.0) == Approx(p.thermal(0.0)).epsilon(1e-12));
    CHECK(th.total(0.5 * p.tf_radius()) == Approx(p.thermal(0.5 * p.tf_radius())).epsilon(1e-12));
}

TEST_CASE("peak density jump across condensation") {
    TrapConfig trap;
    const double tc = critical_temperature(trap);
    const DensityProfile below(trap, equilibrium_state(trap, 0.95 * tc));
    const DensityProfile above(trap, equilibrium_state(trap, 1.05 * tc));
    const double jump = below.peak_total() / above.peak_thermal();
    CHECK(jump > 2.0);
    CHECK(jump < 6.0);
}

TEST_CASE("nearest-neighbour distance") {
    CHECK(nearest_neighbour_distance(4.9e19) == Approx(150e-9).epsilon(0.02));
    CHECK(nearest_neighbour_distance(8.0) == Approx(0.5 * nearest_neighbour_distance(1.0)).epsilon(1e-12));
    CHECK(nearest_neighbour_distance(1.0) == Approx(0.55).epsilon(1e-12));
    CHECK_THROWS_AS(nearest_neighbour_distance(0.0), std::invalid_argument);
}

TEST_CASE("de Broglie wavelength") {
    CHECK(debroglie_wavelength(286e-9) == Approx(350e-9).epsilon(0.01));
    CHECK(debroglie_wavelength(4.0 * 286e-9) ==
          Approx(0.5 * debroglie_wavelength(286e-9)).epsilon(1e-12));
    double prev = debroglie_wavelength(1e-9);
    for (double t = 2e-9; t < 1e-5; t *= 2.0) {
        CHECK(debroglie_wavelength(t) < prev);
        prev = debroglie_wavelength(t);
    }
    CHECK_THROWS_AS(debroglie_wavelength(0.0), std::invalid_argument);
}

TEST_CASE("trap validation") {
    TrapConfig trap;
    CHECK_NOTHROW(trap.validate());
    trap.omega_x = 0.0;
    CHECK_THROWS_AS(trap.validate(), std::invalid_argument);
    trap = TrapConfig{};
    trap.atom_number = 0.5;
    CHECK_THROWS_AS(trap.validate(), std::invalid_argument);
}
