#include <benchmark/benchmark.h>

#include <cmath>

#include "wgsrand/entanglement.hpp"
#include "wgsrand/experiments.hpp"
#include "wgsrand/scheme.hpp"

using namespace wgsrand;

namespace {

void BM_SingleQubitGate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RngStream stream(1, 0);
    StateVector psi = haar_sample(n, stream);
    const Eigen::Matrix2cd h = gates::hadamard();
    std::size_t qubit = 0;
    for (auto _ : state) {
        psi.apply_single_qubit(qubit, h);
        qubit = (qubit + 1) % n;
        benchmark::DoNotOptimize(psi);
    }
    state.SetItemsProcessed(state.iterations() << n);
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(4, 20, 4);

void BM_ControlledPhase(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RngStream stream(2, 0);
    StateVector psi = haar_sample(n, stream);
    for (auto _ : state) {
        psi.apply_controlled_phase(0, n - 1, 5.0 * M_PI / 8.0);
        benchmark::DoNotOptimize(psi);
    }
    state.SetItemsProcessed(state.iterations() << n);
}
BENCHMARK(BM_ControlledPhase)->DenseRange(4, 20, 4);

void BM_ColumnStep(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SchemeConfig config;
    config.rows = n;
    config.seed = 3;
    RngStream stream(config.seed, 0);
    StateVector psi = haar_sample(n, stream);
    for (auto _ : state) {
        column_step(psi, sample_outcome(config, stream), config.phi);
        benchmark::DoNotOptimize(psi);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ColumnStep)->DenseRange(2, 10, 2);

void BM_EntropyEvaluation(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RngStream stream(4, 0);
    const StateVector psi = haar_sample(n, stream);
    const std::size_t n_a = n / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vn_entropy_bits(psi, n_a));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EntropyEvaluation)->DenseRange(2, 10, 2);

void BM_HaarSample(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RngStream stream(5, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_sample(n, stream));
    }
    state.SetItemsProcessed(state.iterations() << n);
}
BENCHMARK(BM_HaarSample)->DenseRange(2, 10, 2);

void BM_MbqcColumnOracle(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    RngStream stream(6, 0);
    const StateVector input = haar_sample(n, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc_column_oracle(input, 5.0 * M_PI / 8.0, stream));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MbqcColumnOracle)->DenseRange(1, 4, 1);

}  // namespace

BENCHMARK_MAIN();
