// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/raster/font.hpp"

#include <algorithm>

#include "inimage/errors.hpp"

namespace inimage::raster {

namespace {

const detail::GlyphBitmap* find_glyph(char32_t cp) {
    const auto* begin = detail::kGlyphs;
    const auto* end = detail::kGlyphs + detail::kGlyphCount;
    const auto* it = std::lower_bound(
        begin, end, cp,
        [](const detail::GlyphBitmap& g, char32_t c) { return g.codepoint < c; });
    if (it != end && it->codepoint == cp) return it;
    return nullptr;
}

void check_font_size(int font_size) {
    if (font_size < 8) {
        throw DataError("font_size must be >= 8");
    }
}

void draw_glyph(Image& img, int x, int y, const detail::GlyphBitmap& glyph, int font_size,
                Rgb color) {
    const int gw = glyph_width(font_size);
    const int gh = font_size;
    for (int oy = 0; oy < gh; ++oy) {
        const int sy = oy * kGlyphCellHeight / gh;
        const std::uint16_t row = glyph.rows[sy];
        if (row == 0) continue;
        for (int ox = 0; ox < gw; ++ox) {
            const int sx = ox * kGlyphCellWidth / gw;
            if (row & (1u << sx)) {
                img.set_clipped(x + ox, y + oy, color);
            }
        }
    }
}

}  // namespace

bool has_glyph(char32_t codepoint) { return find_glyph(codepoint) != nullptr; }

std::u32string decode_utf8(std::string_view utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    while (i < utf8.size()) {
        const unsigned char c = static_cast<unsigned char>(utf8[i]);
        char32_t cp = 0xfffd;
        std::size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xe0) == 0xc0 && i + 1 < utf8.size()) {
            cp = ((c & 0x1f) << 6) | (utf8[i + 1] & 0x3f);
            len = 2;
        } else if ((c & 0xf0) == 0xe0 && i + 2 < utf8.size()) {
            cp = ((c & 0x0f) << 12) | ((utf8[i + 1] & 0x3f) << 6) | (utf8[i + 2] & 0x3f);
            len = 3;
        } else if ((c & 0xf8) == 0xf0 && i + 3 < utf8.size()) {
            cp = ((c & 0x07) << 18) | ((utf8[i + 1] & 0x3f) << 12) |
                 ((utf8[i + 2] & 0x3f) << 6) | (utf8[i + 3] & 0x3f);
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

int glyph_width(int font_size) {
    check_font_size(font_size);
    return std::max(1, font_size * kGlyphCellWidth / kGlyphCellHeight);
}

int line_height(int font_size) {
    check_font_size(font_size);
    return font_size + font_size / 4;
}

int text_width(std::string_view utf8, int font_size) {
    return static_cast<int>(decode_utf8(utf8).size()) * glyph_width(font_size);
}

bool has_renderable_glyph(std::string_view utf8) {
    for (char32_t cp : decode_utf8(utf8)) {
        if (cp != U' ' && has_glyph(cp)) return true;
    }
    return false;
}

void draw_text(Image& img, int x, int y, std::string_view utf8, int font_size, Rgb color,
               std::vector<std::string>* warnings) {
    const int gw = glyph_width(font_size);
    int cx = x;
    for (char32_t cp : decode_utf8(utf8)) {
        const detail::GlyphBitmap* glyph = find_glyph(cp);
        if (!glyph) {
            if (warnings) {
                warnings->push_back("glyph U+" + std::to_string(static_cast<unsigned>(cp)) +
                                    " not in embedded set; rendered as '?'");
            }
            glyph = find_glyph(kReplacementGlyph);
        }
        if (glyph && cp != U' ') {
            draw_glyph(img, cx, y, *glyph, font_size, color);
        }
        cx += gw;
    }
}

std::vector<std::string> wrap_text(std::string_view utf8, int font_size, int max_width) {
    const int gw = glyph_width(font_size);
    const std::size_t max_chars = std::max<std::size_t>(1, static_cast<std::size_t>(max_width / gw));

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= utf8.size()) {
        const std::size_t nl = utf8.find('\n', start);
        std::string_view para = utf8.substr(
            start, nl == std::string_view::npos ? std::string_view::npos : nl - start);

        std::u32string line;
        std::u32string word;
        auto flush_line = [&]() {
            std::string bytes;
            for (char32_t cp : line) {
                // re-encode; glyph set is BMP-only so 3 bytes suffice
                if (cp < 0x80) {
                    bytes.push_back(static_cast<char>(cp));
                } else if (cp < 0x800) {
                    bytes.push_back(static_cast<char>(0xc0 | (cp >> 6)));
                    bytes.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
                } else {
                    bytes.push_back(static_cast<char>(0xe0 | (cp >> 12)));
                    bytes.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
                    bytes.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
                }
            }
            lines.push_back(std::move(bytes));
            line.clear();
        };
        auto append_word = [&]() {
            if (word.empty()) return;
            const std::size_t need = line.empty() ? word.size() : line.size() + 1 + word.size();
            if (need <= max_chars) {
                if (!line.empty()) line.push_back(U' ');
                line += word;
            } else if (word.size() <= max_chars) {
                flush_line();
                line = word;
            } else {
                // hard-break an overlong word
                if (!line.empty()) flush_line();
                std::size_t pos = 0;
                while (word.size() - pos > max_chars) {
                    line = word.substr(pos, max_chars);
                    flush_line();
                    pos += max_chars;
                }
                line = word.substr(pos);
            }
            word.clear();
        };

        for (char32_t cp : decode_utf8(para)) {
            if (cp == U' ' || cp == U'\t' || cp == U'\r') {
                append_word();
            } else {
                word.push_back(cp);
            }
        }
        append_word();
        flush_line();

        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

}  // namespace inimage::raster
