// Serial reference kernels against their OpenMP counterparts.
// Thread count for the parallel variants: OUTHULL_THREADS, else all hardware threads.

#include <benchmark/benchmark.h>

#include <cstdlib>

#include "outhull/hull.hpp"
#include "outhull/ingest.hpp"
#include "outhull/mlp.hpp"
#include "outhull/wavelets.hpp"

using namespace outhull;

namespace {

Parallelism par() {
    if (const char* v = std::getenv("OUTHULL_THREADS")) return {std::max(1, std::atoi(v))};
    return {hardware_threads()};
}

const PointSet& refs() {
    static const PointSet p = ingest::gen_random_points(1500, 784, 0, 255, 1);
    return p;
}

const PointSet& queries() {
    static const PointSet p = ingest::gen_random_points(32, 784, 0, 255, 2);
    return p;
}

void BM_GramSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(reference::gram_matrix(refs()));
}

void BM_GramParallel(benchmark::State& s) {
    for (auto _ : s) {
        hull::ReferenceSet r(refs(), par());
        benchmark::DoNotOptimize(r.gram_row(0).data());
    }
}

void BM_BatchProjectSerial(benchmark::State& s) {
    const hull::ReferenceSet r(refs(), par());
    const auto cfg = hull::SolverConfig::for_scale(r.scale());
    for (auto _ : s) benchmark::DoNotOptimize(reference::batch_project(r, queries().data(), cfg));
}

void BM_BatchProjectParallel(benchmark::State& s) {
    const hull::ReferenceSet r(refs(), par());
    const auto cfg = hull::SolverConfig::for_scale(r.scale());
    for (auto _ : s) benchmark::DoNotOptimize(hull::batch_project(r, queries(), cfg, par()));
}

void BM_DiameterSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(reference::diameter_exact(refs()));
}

void BM_DiameterParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(hull::diameter_exact(refs(), par()));
}

const wavelets::FittedTransform& transform() {
    static const auto t = wavelets::FittedTransform::fit(refs(), {28, 28, 1}, {wavelets::Family::D4, 2, 196});
    return t;
}

void BM_WaveletSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(reference::wavelet_apply(transform(), refs()));
}

void BM_WaveletParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(transform().apply(refs(), par()));
}

const mlp::MlpModel& model() {
    static const auto m = mlp::MlpModel::init(std::vector<std::size_t>{2, 64, 64, 1}, 3);
    return m;
}

constexpr mlp::Bounds kBounds{-3, 3, -3, 3};

void BM_GridSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(reference::eval_grid(model(), kBounds, 200));
}

void BM_GridParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(mlp::eval_grid(model(), kBounds, 200, par()));
}

}  // namespace

BENCHMARK(BM_GramSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchProjectSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchProjectParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WaveletSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WaveletParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
