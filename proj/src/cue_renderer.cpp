// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/cue_renderer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "inimage/errors.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/raster/font.hpp"
#include "inimage/raster/kernels.hpp"

namespace inimage {

namespace {

using raster::Image;
using raster::Rect;
using raster::Rgb;

int to_px(double coord, int dim) {
    return static_cast<int>(std::lround(coord * (dim - 1)));
}

struct PxBox {
    int left, top, right, bottom;  // inclusive corners
    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }
};

PxBox box_pixels(const CueAnnotation& cue, const Image& img) {
    return PxBox{to_px(cue.x0, img.width()), to_px(cue.y0, img.height()),
                 to_px(cue.x1, img.width()), to_px(cue.y1, img.height())};
}

void draw_box_outline(Image& img, const PxBox& b, int stroke, Rgb color) {
    const int w = b.width();
    const int h = b.height();
    const int s = std::min({stroke, w, h});
    raster::kernels::fill_rect(img, Rect{b.left, b.top, w, s}, color);
    raster::kernels::fill_rect(img, Rect{b.left, b.bottom - s + 1, w, s}, color);
    if (h > 2 * s) {
        raster::kernels::fill_rect(img, Rect{b.left, b.top + s, s, h - 2 * s}, color);
        raster::kernels::fill_rect(img, Rect{b.right - s + 1, b.top + s, s, h - 2 * s}, color);
    }
}

// Square brush stamped along the Bresenham walk; integer-snapped.
void draw_thick_line(Image& img, int x0, int y0, int x1, int y1, int stroke, Rgb color) {
    const int lo = -(stroke - 1) / 2;
    const int hi = stroke / 2;
    int dx = std::abs(x1 - x0);
    int dy = -std::abs(y1 - y0);
    int sx = x0 < x1 ? 1 : -1;
    int sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    int x = x0;
    int y = y0;
    while (true) {
        for (int oy = lo; oy <= hi; ++oy) {
            for (int ox = lo; ox <= hi; ++ox) {
                img.set_clipped(x + ox, y + oy, color);
            }
        }
        if (x == x1 && y == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y += sy;
        }
    }
}

long long cross(long long ax, long long ay, long long bx, long long by, long long px,
                long long py) {
    return (bx - ax) * (py - ay) - (by - ay) * (px - ax);
}

void fill_triangle(Image& img, int x0, int y0, int x1, int y1, int x2, int y2, Rgb color) {
    const int minx = std::max(0, std::min({x0, x1, x2}));
    const int maxx = std::min(img.width() - 1, std::max({x0, x1, x2}));
    const int miny = std::max(0, std::min({y0, y1, y2}));
    const int maxy = std::min(img.height() - 1, std::max({y0, y1, y2}));
    for (int y = miny; y <= maxy; ++y) {
        for (int x = minx; x <= maxx; ++x) {
            const long long c0 = cross(x0, y0, x1, y1, x, y);
            const long long c1 = cross(x1, y1, x2, y2, x, y);
            const long long c2 = cross(x2, y2, x0, y0, x, y);
            const bool all_nonneg = c0 >= 0 && c1 >= 0 && c2 >= 0;
            const bool all_nonpos = c0 <= 0 && c1 <= 0 && c2 <= 0;
            if (all_nonneg || all_nonpos) img.set(x, y, color);
        }
    }
}

void draw_arrow(Image& img, const CueAnnotation& cue, const Image& ref) {
    const int x0 = to_px(cue.x0, ref.width());
    const int y0 = to_px(cue.y0, ref.height());
    const int x1 = to_px(cue.x1, ref.width());
    const int y1 = to_px(cue.y1, ref.height());
    draw_thick_line(img, x0, y0, x1, y1, cue.stroke_width, cue.stroke_color);

    const double dx = x1 - x0;
    const double dy = y1 - y0;
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len <= 0.0) return;
    const double ux = dx / len;
    const double uy = dy / len;
    const double head = 4.0 * cue.stroke_width;
    const double bx = x1 - head * ux;
    const double by = y1 - head * uy;
    const double half = head / 2.0;
    const int ax = static_cast<int>(std::lround(bx - half * uy));
    const int ay = static_cast<int>(std::lround(by + half * ux));
    const int cx = static_cast<int>(std::lround(bx + half * uy));
    const int cy = static_cast<int>(std::lround(by - half * ux));
    fill_triangle(img, x1, y1, ax, ay, cx, cy, cue.stroke_color);
}

struct LabelBox {
    Rect rect;          // final placement, clamped into canvas
    bool re_anchored;   // primary placement exited the canvas
};

// Labels sit centered above their anchor; when clipped at the top they fall
// below it. Box captions anchor at the box's top-center and fall below the
// box bottom so the interior is never covered.
LabelBox place_label(const std::string& text, int anchor_x, int anchor_y, int below_y,
                     const Image& img, const RenderStyle& style) {
    const int w = raster::text_width(text, style.font_size);
    const int h = style.font_size;
    int x = anchor_x - w / 2;
    int y = anchor_y - h - style.label_padding;
    bool re_anchored = false;
    if (y < 0) {
        y = below_y + style.label_padding;
        re_anchored = true;
    }
    if (x < 0 || x + w > img.width()) re_anchored = true;
    x = std::clamp(x, 0, std::max(0, img.width() - w));
    if (y + h > img.height()) {
        y = std::max(0, img.height() - h);
        re_anchored = true;
    }
    return LabelBox{Rect{x, y, w, h}, re_anchored};
}

LabelBox label_box_for(const CueAnnotation& cue, const Image& img, const RenderStyle& style) {
    const std::string text = cue.text.value_or("");
    if (cue.kind == CueKind::text_label) {
        const int ax = to_px(cue.x0, img.width());
        const int ay = to_px(cue.y0, img.height());
        return place_label(text, ax, ay, ay, img, style);
    }
    const PxBox b = box_pixels(cue, img);
    return place_label(text, (b.left + b.right) / 2, b.top, b.bottom, img, style);
}

bool has_label(const CueAnnotation& cue) {
    return cue.text && !cue.text->empty() &&
           (cue.kind == CueKind::text_label || cue.kind == CueKind::bounding_box);
}

}  // namespace

std::vector<std::string> validate_cues(const std::vector<CueAnnotation>& cues,
                                       const raster::Image& image, const RenderStyle& style) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cues.size(); ++i) {
        const auto prefix = "cues[" + std::to_string(i) + "]: ";
        for (const auto& v : validate_cue(cues[i])) {
            out.push_back(prefix + v);
        }
        if (cues[i].kind == CueKind::arrow && cues[i].x0 == cues[i].x1 &&
            cues[i].y0 == cues[i].y1) {
            out.push_back(prefix + "degenerate arrow");
        }
        if (has_label(cues[i]) && validate_cue(cues[i]).empty()) {
            if (label_box_for(cues[i], image, style).re_anchored) {
                out.push_back(prefix + "label exits canvas; will be re-anchored");
            }
        }
    }
    return out;
}

std::vector<std::string> hard_cue_violations(const std::vector<CueAnnotation>& cues,
                                             const raster::Image& image,
                                             const RenderStyle& style) {
    std::vector<std::string> out;
    for (auto& v : validate_cues(cues, image, style)) {
        if (!v.ends_with("will be re-anchored")) out.push_back(std::move(v));
    }
    return out;
}

raster::Image apply_cues(const raster::Image& image, const std::vector<CueAnnotation>& cues,
                         const RenderStyle& style, std::vector<std::string>* warnings) {
    const auto hard = hard_cue_violations(cues, image, style);
    if (!hard.empty()) {
        throw DataError("invalid cue geometry: " + hard.front());
    }
    Image out = image;
    for (const auto& cue : cues) {
        switch (cue.kind) {
            case CueKind::bounding_box:
                draw_box_outline(out, box_pixels(cue, image), cue.stroke_width, cue.stroke_color);
                break;
            case CueKind::line:
                draw_thick_line(out, to_px(cue.x0, image.width()), to_px(cue.y0, image.height()),
                                to_px(cue.x1, image.width()), to_px(cue.y1, image.height()),
                                cue.stroke_width, cue.stroke_color);
                break;
            case CueKind::arrow:
                draw_arrow(out, cue, image);
                break;
            case CueKind::text_label:
                break;
        }
        if (has_label(cue)) {
            const LabelBox box = label_box_for(cue, image, style);
            raster::draw_text(out, box.rect.x, box.rect.y, *cue.text, style.font_size,
                              cue.stroke_color, warnings);
        }
    }
    return out;
}

raster::Image apply_cues(const ImageRef& image, const std::vector<CueAnnotation>& cues,
                         const RenderStyle& style, std::vector<std::string>* warnings) {
    return apply_cues(raster::decode_image(load_image_bytes(image)), cues, style, warnings);
}

std::vector<raster::Rect> cue_touch_regions(const CueAnnotation& cue, const raster::Image& image,
                                            const RenderStyle& style) {
    std::vector<Rect> out;
    const int w = image.width();
    const int h = image.height();
    auto push = [&](Rect r) {
        r = r.clipped_to(w, h);
        if (!r.empty()) out.push_back(r);
    };
    switch (cue.kind) {
        case CueKind::bounding_box: {
            const PxBox b = box_pixels(cue, image);
            const int s = std::min({cue.stroke_width, b.width(), b.height()});
            push(Rect{b.left, b.top, b.width(), s});
            push(Rect{b.left, b.bottom - s + 1, b.width(), s});
            push(Rect{b.left, b.top, s, b.height()});
            push(Rect{b.right - s + 1, b.top, s, b.height()});
            break;
        }
        case CueKind::line:
        case CueKind::arrow: {
            const int x0 = to_px(cue.x0, w);
            const int y0 = to_px(cue.y0, h);
            const int x1 = to_px(cue.x1, w);
            const int y1 = to_px(cue.y1, h);
            // brush half-width plus arrowhead reach
            const int pad = cue.stroke_width + (cue.kind == CueKind::arrow ? 4 * cue.stroke_width : 0) + 1;
            push(Rect{std::min(x0, x1) - pad, std::min(y0, y1) - pad,
                      std::abs(x1 - x0) + 2 * pad + 1, std::abs(y1 - y0) + 2 * pad + 1});
            break;
        }
        case CueKind::text_label:
            break;
    }
    if (has_label(cue)) {
        push(label_box_for(cue, image, style).rect);
    }
    return out;
}

}  // namespace inimage
