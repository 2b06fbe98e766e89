// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "inimage/raster/image.hpp"

// Fixed 1-bit glyph set embedded in the artifact (printable ASCII plus common
// math symbols). Glyphs are 10x20 cells scaled with nearest-neighbor integer
// arithmetic, so text raster output is byte-deterministic on any platform.
// Codepoints outside the set render as '?' and emit a warning.
namespace inimage::raster {

namespace detail {
struct GlyphBitmap {
    char32_t codepoint;
    std::uint16_t rows[20];  // bit x set -> ink at column x
};
extern const GlyphBitmap kGlyphs[];
extern const std::size_t kGlyphCount;
}  // namespace detail

inline constexpr int kGlyphCellWidth = 10;
inline constexpr int kGlyphCellHeight = 20;
inline constexpr char32_t kReplacementGlyph = U'?';

bool has_glyph(char32_t codepoint);

// Invalid byte sequences decode to U+FFFD (which later renders as '?').
std::u32string decode_utf8(std::string_view utf8);

// Metrics for a given pixel font size (monospace).
int glyph_width(int font_size);
int line_height(int font_size);
int text_width(std::string_view utf8, int font_size);

// True when at least one codepoint of the text maps to an embedded glyph.
bool has_renderable_glyph(std::string_view utf8);

// Draws a single line, top-left anchored, ink pixels only (no background).
// Unknown codepoints are appended to `warnings` when provided.
void draw_text(Image& img, int x, int y, std::string_view utf8, int font_size, Rgb color,
               std::vector<std::string>* warnings = nullptr);

// Greedy word wrap at max_width pixels; words longer than a line are
// hard-broken. Embedded newlines start new lines.
std::vector<std::string> wrap_text(std::string_view utf8, int font_size, int max_width);

}  // namespace inimage::raster
