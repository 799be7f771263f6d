// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qgep/hamiltonian/models.hpp"
#include "qgep/quantum/kernels.hpp"
#include "qgep/rng.hpp"

using namespace qgep;

namespace {

quantum::StateVector random_state(int n_bits)
{
    Rng rng(7);
    quantum::StateVector s(n_bits);
    for (auto& a : s.amplitudes()) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    }
    s.normalize();
    return s;
}

template <bool Parallel>
void BM_Apply1q(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto s = random_state(n);
    const auto u = quantum::gate_matrix(quantum::GateKind::Ry, 0.3);
    for (auto _ : state) {
        for (int q = 0; q < n; ++q) {
            if constexpr (Parallel) {
                quantum::kernels::apply_1q_parallel(s.amplitudes(), q, u);
            } else {
                quantum::kernels::apply_1q_serial(s.amplitudes(), q, u);
            }
        }
        benchmark::DoNotOptimize(s[0]);
    }
    state.SetItemsProcessed(state.iterations() * n * static_cast<std::int64_t>(s.dim()));
}

template <bool Parallel>
void BM_Cnot(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto s = random_state(n);
    for (auto _ : state) {
        for (int q = 0; q + 1 < n; ++q) {
            if constexpr (Parallel) {
                quantum::kernels::apply_cnot_parallel(s.amplitudes(), q, q + 1);
            } else {
                quantum::kernels::apply_cnot_serial(s.amplitudes(), q, q + 1);
            }
        }
        benchmark::DoNotOptimize(s[0]);
    }
}

template <bool Parallel>
void BM_Expectation(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto s = random_state(n);
    const auto h = hamiltonian::xx_chain(n, 1.0, hamiltonian::Boundary::Periodic);
    for (auto _ : state) {
        double e = 0.0;
        for (const auto& t : h.terms) {
            if constexpr (Parallel) {
                e += t.coefficient * quantum::kernels::pauli_expectation_parallel(s.amplitudes(), t.mask());
            } else {
                e += t.coefficient * quantum::kernels::pauli_expectation_serial(s.amplitudes(), n, t.mask());
            }
        }
        benchmark::DoNotOptimize(e);
    }
}

} // namespace

BENCHMARK(BM_Apply1q<false>)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(BM_Apply1q<true>)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(BM_Cnot<false>)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(BM_Cnot<true>)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(BM_Expectation<false>)->Arg(10)->Arg(16);
BENCHMARK(BM_Expectation<true>)->Arg(10)->Arg(16);

BENCHMARK_MAIN();
