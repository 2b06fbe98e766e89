// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace inimage::raster {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kRed{255, 0, 0};

// Half-open pixel rectangle: spans [x, x+w) x [y, y+h).
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool operator==(const Rect&) const = default;
    bool empty() const { return w <= 0 || h <= 0; }
    int right() const { return x + w; }
    int bottom() const { return y + h; }
    bool contains(int px, int py) const {
        return px >= x && px < right() && py >= y && py < bottom();
    }
    bool intersects(const Rect& o) const {
        return !empty() && !o.empty() && x < o.right() && o.x < right() && y < o.bottom() &&
               o.y < bottom();
    }
    Rect clipped_to(int width, int height) const {
        int x0 = x < 0 ? 0 : x;
        int y0 = y < 0 ? 0 : y;
        int x1 = right() > width ? width : right();
        int y1 = bottom() > height ? height : bottom();
        return Rect{x0, y0, x1 - x0, y1 - y0};
    }
};

// Interleaved 8-bit RGB, row-major. Immutable use is thread-safe.
class Image {
public:
    Image() = default;
    Image(int width, int height, Rgb fill = kWhite);

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return width_ == 0 || height_ == 0; }

    std::uint8_t* data() { return pixels_.data(); }
    const std::uint8_t* data() const { return pixels_.data(); }
    std::size_t byte_size() const { return pixels_.size(); }

    std::span<std::uint8_t> row(int y) {
        return {pixels_.data() + static_cast<std::size_t>(y) * row_bytes(), row_bytes()};
    }
    std::span<const std::uint8_t> row(int y) const {
        return {pixels_.data() + static_cast<std::size_t>(y) * row_bytes(), row_bytes()};
    }
    std::size_t row_bytes() const { return static_cast<std::size_t>(width_) * 3; }

    Rgb at(int x, int y) const {
        const std::uint8_t* p = pixel_ptr(x, y);
        return {p[0], p[1], p[2]};
    }
    void set(int x, int y, Rgb c) {
        std::uint8_t* p = pixel_ptr(x, y);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }
    // Bounds-checked set; silently drops out-of-canvas writes.
    void set_clipped(int x, int y, Rgb c) {
        if (x >= 0 && x < width_ && y >= 0 && y < height_) set(x, y, c);
    }

    Rect bounds() const { return Rect{0, 0, width_, height_}; }

    bool operator==(const Image&) const = default;

private:
    std::uint8_t* pixel_ptr(int x, int y) {
        return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
    }
    const std::uint8_t* pixel_ptr(int x, int y) const {
        return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

}  // namespace inimage::raster
