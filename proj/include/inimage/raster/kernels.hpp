// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "inimage/raster/image.hpp"

// Pixel kernels behind all composition work. Each kernel has a serial
// reference implementation and an OpenMP row-parallel one; both produce
// byte-identical output, which the tests assert. The public entry points
// dispatch on a process-wide switch.
namespace inimage::raster::kernels {

bool parallel_enabled();
void set_parallel(bool enabled);
bool compiled_with_openmp();

void fill_rect(Image& img, Rect rect, Rgb color);
void blit(Image& dst, const Image& src, int x, int y);
Image scale_nearest(const Image& src, int out_width, int out_height);
std::size_t count_diff(const Image& a, const Image& b);

// Serial reference variants, kept for testing and benchmarking.
void fill_rect_serial(Image& img, Rect rect, Rgb color);
void blit_serial(Image& dst, const Image& src, int x, int y);
Image scale_nearest_serial(const Image& src, int out_width, int out_height);
std::size_t count_diff_serial(const Image& a, const Image& b);

void fill_rect_omp(Image& img, Rect rect, Rgb color);
void blit_omp(Image& dst, const Image& src, int x, int y);
Image scale_nearest_omp(const Image& src, int out_width, int out_height);
std::size_t count_diff_omp(const Image& a, const Image& b);

}  // namespace inimage::raster::kernels
