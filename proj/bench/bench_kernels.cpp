// Serial reference vs OpenMP kernels.

#include "test_images.hpp"
#include "wmark/attacks.hpp"
#include "wmark/codec.hpp"
#include "wmark/wavelet.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wmark;

const Image& host(int n)
{
    static const Image h512 = testing::natural_scene(512, 512);
    static const Image h1024 = testing::natural_scene(1024, 1024);
    return n == 512 ? h512 : h1024;
}

template <bool Parallel>
void BM_Dwt2d(benchmark::State& state)
{
    const auto m = to_matrix(host(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto p = Parallel ? dwt2d_multi(m, WaveletId::db4, 4) : serial::dwt2d_multi(m, WaveletId::db4, 4);
        benchmark::DoNotOptimize(p.approx.values().data());
    }
}

template <bool Parallel>
void BM_Idwt2d(benchmark::State& state)
{
    const auto p = dwt2d_multi(to_matrix(host(static_cast<int>(state.range(0)))), WaveletId::db4, 4);
    for (auto _ : state) {
        auto m = Parallel ? idwt2d_multi(p) : serial::idwt2d_multi(p);
        benchmark::DoNotOptimize(m.values().data());
    }
}

template <bool Parallel>
void BM_Median3(benchmark::State& state)
{
    const auto& img = host(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? median_filter3(img) : serial::median_filter3(img);
        benchmark::DoNotOptimize(out.samples.data());
    }
}

template <bool Parallel>
void BM_JpegLike(benchmark::State& state)
{
    const auto& img = host(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? jpeg_like(img, 50) : serial::jpeg_like(img, 50);
        benchmark::DoNotOptimize(out.samples.data());
    }
}

void BM_EmbedExtract(benchmark::State& state)
{
    const auto& img = host(static_cast<int>(state.range(0)));
    const auto wm = testing::random_mark(32, 32, 7);
    WatermarkKey key;
    key.lcg.z0 = 42;
    for (auto _ : state) {
        auto [marked, report] = embed(img, wm, key);
        auto [rec, tally] = extract(marked, key);
        benchmark::DoNotOptimize(rec.bits.data());
    }
}

BENCHMARK(BM_Dwt2d<false>)->Name("dwt2d/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_Dwt2d<true>)->Name("dwt2d/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_Idwt2d<false>)->Name("idwt2d/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_Idwt2d<true>)->Name("idwt2d/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_Median3<false>)->Name("median3/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_Median3<true>)->Name("median3/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_JpegLike<false>)->Name("jpeglike/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_JpegLike<true>)->Name("jpeglike/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_EmbedExtract)->Name("embed+extract")->Arg(512);

} // namespace

BENCHMARK_MAIN();
