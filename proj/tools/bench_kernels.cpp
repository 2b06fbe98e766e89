// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

// Serial vs OpenMP raster kernel comparison:
//   ./bench_kernels [--benchmark_filter=scale]

#include <benchmark/benchmark.h>

#include "inimage/raster/kernels.hpp"

namespace {

using namespace inimage::raster;

Image checkerboard(int w, int h) {
    Image img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const bool on = ((x / 8) + (y / 8)) % 2 == 0;
            img.set(x, y, on ? Rgb{30, 90, 200} : Rgb{240, 240, 240});
        }
    }
    return img;
}

void bm_fill_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Image img(n, n);
    for (auto _ : state) {
        kernels::fill_rect_serial(img, Rect{0, 0, n, n}, Rgb{12, 34, 56});
        benchmark::DoNotOptimize(img.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(img.byte_size()));
}

void bm_fill_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Image img(n, n);
    for (auto _ : state) {
        kernels::fill_rect_omp(img, Rect{0, 0, n, n}, Rgb{12, 34, 56});
        benchmark::DoNotOptimize(img.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(img.byte_size()));
}

void bm_scale_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image src = checkerboard(n, n);
    for (auto _ : state) {
        Image out = kernels::scale_nearest_serial(src, n * 2, n * 2);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_scale_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image src = checkerboard(n, n);
    for (auto _ : state) {
        Image out = kernels::scale_nearest_omp(src, n * 2, n * 2);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_blit_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image src = checkerboard(n, n);
    Image dst(n + 64, n + 64);
    for (auto _ : state) {
        kernels::blit_serial(dst, src, 32, 32);
        benchmark::DoNotOptimize(dst.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(src.byte_size()));
}

void bm_blit_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image src = checkerboard(n, n);
    Image dst(n + 64, n + 64);
    for (auto _ : state) {
        kernels::blit_omp(dst, src, 32, 32);
        benchmark::DoNotOptimize(dst.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(src.byte_size()));
}

void bm_diff_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image a = checkerboard(n, n);
    Image b = a;
    b.set(n / 2, n / 2, Rgb{1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::count_diff_serial(a, b));
    }
}

void bm_diff_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Image a = checkerboard(n, n);
    Image b = a;
    b.set(n / 2, n / 2, Rgb{1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::count_diff_omp(a, b));
    }
}

}  // namespace

BENCHMARK(bm_fill_serial)->Arg(512)->Arg(2048);
BENCHMARK(bm_fill_omp)->Arg(512)->Arg(2048);
BENCHMARK(bm_scale_serial)->Arg(512)->Arg(1024);
BENCHMARK(bm_scale_omp)->Arg(512)->Arg(1024);
BENCHMARK(bm_blit_serial)->Arg(512)->Arg(2048);
BENCHMARK(bm_blit_omp)->Arg(512)->Arg(2048);
BENCHMARK(bm_diff_serial)->Arg(512)->Arg(2048);
BENCHMARK(bm_diff_omp)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
