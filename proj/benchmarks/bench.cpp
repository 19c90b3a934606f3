#include <benchmark/benchmark.h>

#include <cmath>

#include "rydsim/excitation.hpp"
#include "rydsim/gas_model.hpp"
#include "rydsim/numerics.hpp"
#include "rydsim/oracle.hpp"
#include "rydsim/superatom_model.hpp"

using namespace rydsim;
using namespace rydsim::constants;

namespace {

BlockadeParams default_params() { return BlockadeParams::from_lasers(LaserParams{}); }

void bm_polylog(benchmark::State& state) {
    const double z = state.range(0) / 1000.0;
    for (auto _ : state) benchmark::DoNotOptimize(polylog(1.5, z));
}
BENCHMARK(bm_polylog)->Arg(500)->Arg(990)->Arg(1000);

void bm_equilibrium_state(benchmark::State& state) {
    TrapConfig trap;
    const double t = state.range(0) * 1e-9;
    for (auto _ : state) benchmark::DoNotOptimize(equilibrium_state(trap, t));
}
BENCHMARK(bm_equilibrium_state)->Arg(300)->Arg(700)->Arg(2000);

void bm_rydberg_number(benchmark::State& state) {
    const BlockadeParams params = default_params();
    TrapConfig trap;
    trap.atom_number = 1e5;
    const DensityProfile profile(trap, equilibrium_state(trap, 300e-9));
    const RadialProfile radial = as_radial(profile);
    const double tau = state.range(0) * 1e-9;
    for (auto _ : state) benchmark::DoNotOptimize(rydberg_number(radial, params, tau));
}
BENCHMARK(bm_rydberg_number)->Arg(170)->Arg(370)->Arg(1970);

void bm_sweep_cell(benchmark::State& state) {
    // One (temperature, duration) cell of the fraction sweep.
    const BlockadeParams params = default_params();
    TrapConfig trap;
    AtomSchedule sched;
    sched.table = {{200e-9, 1.0e5}, {5e-6, 1.0e7}};
    const std::vector<double> durations{370e-9};
    const std::vector<double> temps{700e-9};
    for (auto _ : state)
        benchmark::DoNotOptimize(fraction_sweep(trap, sched, params, durations, temps));
}
BENCHMARK(bm_sweep_cell);

void bm_oracle_evolve(benchmark::State& state) {
    const int n = int(state.range(0));
    const BlockadeParams params = default_params();
    OracleSystem sys;
    sys.omega_0 = params.omega_0;
    sys.c6 = params.c6;
    sys.positions = strong_blockade_positions(n, sys.omega_0, sys.c6, 1);
    const double t_max = 6.0 * two_pi / (std::sqrt(double(n)) * sys.omega_0);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(sys, t_max, 256));
}
BENCHMARK(bm_oracle_evolve)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
