// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/raster/kernels.hpp"

#include <atomic>
#include <cstring>

#include "inimage/errors.hpp"

namespace inimage::raster::kernels {

namespace {

std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

void fill_row(Image& img, int y, int x0, int x1, Rgb color) {
    std::uint8_t* p = img.row(y).data() + static_cast<std::size_t>(x0) * 3;
    for (int x = x0; x < x1; ++x) {
        *p++ = color.r;
        *p++ = color.g;
        *p++ = color.b;
    }
}

void blit_row(Image& dst, const Image& src, int sy, int dx, int dy, int sx0, int sx1) {
    std::memcpy(dst.row(dy).data() + static_cast<std::size_t>(dx + sx0) * 3,
                src.row(sy).data() + static_cast<std::size_t>(sx0) * 3,
                static_cast<std::size_t>(sx1 - sx0) * 3);
}

void scale_row(const Image& src, Image& out, int y) {
    const int sw = src.width();
    const int sh = src.height();
    const int ow = out.width();
    const int oh = out.height();
    const int sy = static_cast<int>(static_cast<std::int64_t>(y) * sh / oh);
    const std::uint8_t* srow = src.row(sy).data();
    std::uint8_t* orow = out.row(y).data();
    for (int x = 0; x < ow; ++x) {
        const int sx = static_cast<int>(static_cast<std::int64_t>(x) * sw / ow);
        const std::uint8_t* p = srow + static_cast<std::size_t>(sx) * 3;
        orow[0] = p[0];
        orow[1] = p[1];
        orow[2] = p[2];
        orow += 3;
    }
}

std::size_t diff_row(const Image& a, const Image& b, int y) {
    const std::uint8_t* pa = a.row(y).data();
    const std::uint8_t* pb = b.row(y).data();
    std::size_t n = 0;
    for (int x = 0; x < a.width(); ++x) {
        if (pa[0] != pb[0] || pa[1] != pb[1] || pa[2] != pb[2]) ++n;
        pa += 3;
        pb += 3;
    }
    return n;
}

void check_same_shape(const Image& a, const Image& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw DataError("count_diff: image dimensions differ");
    }
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }

bool compiled_with_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void fill_rect_serial(Image& img, Rect rect, Rgb color) {
    Rect r = rect.clipped_to(img.width(), img.height());
    if (r.empty()) return;
    for (int y = r.y; y < r.bottom(); ++y) {
        fill_row(img, y, r.x, r.right(), color);
    }
}

void fill_rect_omp(Image& img, Rect rect, Rgb color) {
    Rect r = rect.clipped_to(img.width(), img.height());
    if (r.empty()) return;
#pragma omp parallel for schedule(static)
    for (int y = r.y; y < r.bottom(); ++y) {
        fill_row(img, y, r.x, r.right(), color);
    }
}

void blit_serial(Image& dst, const Image& src, int x, int y) {
    Rect r = Rect{x, y, src.width(), src.height()}.clipped_to(dst.width(), dst.height());
    if (r.empty()) return;
    const int sx0 = r.x - x;
    const int sx1 = sx0 + r.w;
    for (int dy = r.y; dy < r.bottom(); ++dy) {
        blit_row(dst, src, dy - y, x, dy, sx0, sx1);
    }
}

void blit_omp(Image& dst, const Image& src, int x, int y) {
    Rect r = Rect{x, y, src.width(), src.height()}.clipped_to(dst.width(), dst.height());
    if (r.empty()) return;
    const int sx0 = r.x - x;
    const int sx1 = sx0 + r.w;
#pragma omp parallel for schedule(static)
    for (int dy = r.y; dy < r.bottom(); ++dy) {
        blit_row(dst, src, dy - y, x, dy, sx0, sx1);
    }
}

Image scale_nearest_serial(const Image& src, int out_width, int out_height) {
    if (out_width <= 0 || out_height <= 0) {
        throw DataError("scale_nearest: output dimension must be positive");
    }
    Image out(out_width, out_height);
    for (int y = 0; y < out_height; ++y) {
        scale_row(src, out, y);
    }
    return out;
}

Image scale_nearest_omp(const Image& src, int out_width, int out_height) {
    if (out_width <= 0 || out_height <= 0) {
        throw DataError("scale_nearest: output dimension must be positive");
    }
    Image out(out_width, out_height);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < out_height; ++y) {
        scale_row(src, out, y);
    }
    return out;
}

std::size_t count_diff_serial(const Image& a, const Image& b) {
    check_same_shape(a, b);
    std::size_t n = 0;
    for (int y = 0; y < a.height(); ++y) {
        n += diff_row(a, b, y);
    }
    return n;
}

std::size_t count_diff_omp(const Image& a, const Image& b) {
    check_same_shape(a, b);
    long long n = 0;
#pragma omp parallel for schedule(static) reduction(+ : n)
    for (int y = 0; y < a.height(); ++y) {
        n += static_cast<long long>(diff_row(a, b, y));
    }
    return static_cast<std::size_t>(n);
}

void fill_rect(Image& img, Rect rect, Rgb color) {
    parallel_enabled() ? fill_rect_omp(img, rect, color) : fill_rect_serial(img, rect, color);
}

void blit(Image& dst, const Image& src, int x, int y) {
    parallel_enabled() ? blit_omp(dst, src, x, y) : blit_serial(dst, src, x, y);
}

Image scale_nearest(const Image& src, int out_width, int out_height) {
    return parallel_enabled() ? scale_nearest_omp(src, out_width, out_height)
                              : scale_nearest_serial(src, out_width, out_height);
}

std::size_t count_diff(const Image& a, const Image& b) {
    return parallel_enabled() ? count_diff_omp(a, b) : count_diff_serial(a, b);
}

}  // namespace inimage::raster::kernels
