// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/layout.hpp"

#include <algorithm>
#include <cmath>

#include "inimage/errors.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/raster/font.hpp"
#include "inimage/raster/kernels.hpp"

namespace inimage {

namespace {

using raster::Image;
using raster::Rect;

constexpr raster::Rgb kTextColor = raster::kBlack;
constexpr raster::Rgb kSeparatorColor{160, 160, 160};

int banner_font_size(const LayoutStyle& style) { return style.text.font_size + 4; }

void require_renderable(const std::string& text, const char* what) {
    if (!text.empty() && !raster::has_renderable_glyph(text)) {
        throw DataError(std::string(what) + ": no renderable glyphs");
    }
}

std::vector<std::string> wrap_for(const std::string& text, int width, int font_size) {
    return raster::wrap_text(text, font_size, width);
}

void draw_lines(Image& img, const std::vector<std::string>& lines, int x, int y, int font_size) {
    const int lh = raster::line_height(font_size);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        raster::draw_text(img, x, y + static_cast<int>(i) * lh, lines[i], font_size, kTextColor);
    }
}

// Scale preserving aspect to an exact target width.
Image scale_to_width(const Image& src, int target_w) {
    if (src.width() == target_w) return src;
    const int target_h = std::max(
        1, static_cast<int>(static_cast<std::int64_t>(src.height()) * target_w / src.width()));
    return raster::kernels::scale_nearest(src, target_w, target_h);
}

Image render_card(const Image& visual, const std::vector<std::string>& lines,
                  const LayoutStyle& style) {
    const int cw = style.card_width - 2 * style.padding;
    const Image scaled = scale_to_width(visual, cw);
    const int lh = raster::line_height(style.text.font_size);
    const int text_h = static_cast<int>(lines.size()) * lh;
    const int height = style.padding + scaled.height() + style.padding + text_h + style.padding;

    Image card(style.card_width, height, style.background);
    raster::kernels::blit(card, scaled, style.padding, style.padding);
    draw_lines(card, lines, style.padding, style.padding + scaled.height() + style.padding,
               style.text.font_size);
    return card;
}

}  // namespace

void validate_style(const LayoutStyle& style) {
    if (style.card_width <= 2 * style.padding) {
        throw DataError("layout style: card_width must exceed 2*padding");
    }
    if (style.max_long_side < style.card_width) {
        throw DataError("layout style: max_long_side must be >= card_width");
    }
    if (style.separator_width < 0 || style.padding < 0) {
        throw DataError("layout style: negative spacing");
    }
}

std::string to_string(RegionRole r) {
    switch (r) {
        case RegionRole::banner: return "banner";
        case RegionRole::demo_card: return "demo_card";
        case RegionRole::query_card: return "query_card";
    }
    return "?";
}

std::vector<std::string> validate_aggregate(const AggregateImage& agg) {
    std::vector<std::string> out;
    int banners = 0;
    int queries = 0;
    const Rect canvas = agg.pixels.bounds();
    for (std::size_t i = 0; i < agg.region_map.size(); ++i) {
        const auto& r = agg.region_map[i];
        if (r.role == RegionRole::banner) ++banners;
        if (r.role == RegionRole::query_card) ++queries;
        if (r.rect.x < 0 || r.rect.y < 0 || r.rect.right() > canvas.w ||
            r.rect.bottom() > canvas.h) {
            out.push_back("region " + std::to_string(i) + ": exits canvas");
        }
        for (std::size_t j = i + 1; j < agg.region_map.size(); ++j) {
            if (r.rect.intersects(agg.region_map[j].rect)) {
                out.push_back("regions " + std::to_string(i) + " and " + std::to_string(j) +
                              " overlap");
            }
        }
    }
    if (banners != 1) out.push_back("expected exactly one banner region");
    if (queries != 1) out.push_back("expected exactly one query_card region");
    return out;
}

json region_map_to_json(const std::vector<Region>& regions) {
    json arr = json::array();
    for (const auto& r : regions) {
        arr.push_back(json{{"role", to_string(r.role)},
                           {"index", r.index},
                           {"x", r.rect.x},
                           {"y", r.rect.y},
                           {"w", r.rect.w},
                           {"h", r.rect.h}});
    }
    return arr;
}

raster::Image render_text_block(const std::string& text, int width, int font_size,
                                const LayoutStyle& style) {
    const auto lines = wrap_for(text, width, font_size);
    const int lh = raster::line_height(font_size);
    Image block(width, std::max(lh, static_cast<int>(lines.size()) * lh), style.background);
    draw_lines(block, lines, 0, 0, font_size);
    return block;
}

raster::Image render_demo_card(const Demonstration& demo, const LayoutStyle& style,
                               bool include_cues, bool include_cot) {
    validate_style(style);
    require_renderable(demo.question, "question");
    require_renderable(demo.chain_of_thought, "chain_of_thought");
    require_renderable(demo.answer, "answer");

    Image visual = raster::decode_image(load_image_bytes(demo.image));
    if (include_cues && !demo.cues.empty()) {
        visual = apply_cues(visual, demo.cues, style.text);
    }

    const int cw = style.card_width - 2 * style.padding;
    std::vector<std::string> lines;
    for (auto& l : wrap_for("Question: " + demo.question, cw, style.text.font_size)) {
        lines.push_back(std::move(l));
    }
    if (include_cot && !demo.chain_of_thought.empty()) {
        for (auto& l : wrap_for("Reasoning: " + demo.chain_of_thought, cw, style.text.font_size)) {
            lines.push_back(std::move(l));
        }
    }
    for (auto& l : wrap_for("The answer is " + demo.answer + ".", cw, style.text.font_size)) {
        lines.push_back(std::move(l));
    }
    return render_card(visual, lines, style);
}

raster::Image render_query_card(const QueryInstance& query, const LayoutStyle& style) {
    validate_style(style);
    require_renderable(query.question, "question");

    const Image visual = raster::decode_image(load_image_bytes(query.image));
    const int cw = style.card_width - 2 * style.padding;
    std::vector<std::string> lines;
    for (auto& l : wrap_for("Question: " + query.question, cw, style.text.font_size)) {
        lines.push_back(std::move(l));
    }
    if (query.answer_type == AnswerType::multiple_choice && query.choices) {
        for (std::size_t i = 0; i < query.choices->size(); ++i) {
            const std::string line =
                "(" + std::string(1, static_cast<char>('A' + i)) + ") " + (*query.choices)[i];
            for (auto& l : wrap_for(line, cw, style.text.font_size)) {
                lines.push_back(std::move(l));
            }
        }
    }
    return render_card(visual, lines, style);
}

ComposedBlock compose_demos(const std::vector<raster::Image>& cards, LayoutOrder order,
                            const LayoutStyle& style) {
    if (cards.empty()) {
        throw DataError("compose_demos: need at least one card");
    }
    const int gap = style.padding + style.separator_width + style.padding;
    const bool vertical = layout_order_is_vertical(order);
    const bool reversed = order == LayoutOrder::B2T || order == LayoutOrder::R2L;

    // placement runs in visual order; rects are reported per input index
    std::vector<int> placement(cards.size());
    for (std::size_t i = 0; i < cards.size(); ++i) placement[i] = static_cast<int>(i);
    if (reversed) std::reverse(placement.begin(), placement.end());

    int width = 0;
    int height = 0;
    if (vertical) {
        for (const auto& c : cards) {
            width = std::max(width, c.width());
            height += c.height();
        }
        height += gap * static_cast<int>(cards.size() - 1);
    } else {
        for (const auto& c : cards) {
            height = std::max(height, c.height());
            width += c.width();
        }
        width += gap * static_cast<int>(cards.size() - 1);
    }

    ComposedBlock block;
    block.pixels = Image(width, height, style.background);
    block.card_rects.resize(cards.size());

    int cursor = 0;
    for (std::size_t pos = 0; pos < placement.size(); ++pos) {
        const int idx = placement[pos];
        const Image& card = cards[static_cast<std::size_t>(idx)];
        if (vertical) {
            raster::kernels::blit(block.pixels, card, 0, cursor);
            block.card_rects[static_cast<std::size_t>(idx)] =
                Rect{0, cursor, card.width(), card.height()};
            cursor += card.height();
            if (pos + 1 < placement.size()) {
                raster::kernels::fill_rect(
                    block.pixels, Rect{0, cursor + style.padding, width, style.separator_width},
                    kSeparatorColor);
                cursor += gap;
            }
        } else {
            raster::kernels::blit(block.pixels, card, cursor, 0);
            block.card_rects[static_cast<std::size_t>(idx)] =
                Rect{cursor, 0, card.width(), card.height()};
            cursor += card.width();
            if (pos + 1 < placement.size()) {
                raster::kernels::fill_rect(
                    block.pixels, Rect{cursor + style.padding, 0, style.separator_width, height},
                    kSeparatorColor);
                cursor += gap;
            }
        }
    }
    return block;
}

AggregateImage compose_aggregate(const ComposedBlock& demo_block, const raster::Image& query_card,
                                 const LayoutStyle& style) {
    validate_style(style);
    const int p = style.padding;
    const int content_w = std::max(demo_block.pixels.width(), query_card.width());

    const Image banner =
        render_text_block(style.banner_text, content_w, banner_font_size(style), style);
    const Image label_demo =
        render_text_block(style.section_labels.first, content_w, style.text.font_size, style);
    const Image label_query =
        render_text_block(style.section_labels.second, content_w, style.text.font_size, style);

    const int total_h = p + banner.height() + p + label_demo.height() + p +
                        demo_block.pixels.height() + p + label_query.height() + p +
                        query_card.height() + p;

    AggregateImage agg;
    agg.pixels = Image(content_w + 2 * p, total_h, style.background);

    int y = p;
    raster::kernels::blit(agg.pixels, banner, p, y);
    agg.region_map.push_back(
        Region{RegionRole::banner, 0, Rect{p, y, banner.width(), banner.height()}});
    y += banner.height() + p;

    raster::kernels::blit(agg.pixels, label_demo, p, y);
    y += label_demo.height() + p;

    raster::kernels::blit(agg.pixels, demo_block.pixels, p, y);
    for (std::size_t i = 0; i < demo_block.card_rects.size(); ++i) {
        Rect r = demo_block.card_rects[i];
        r.x += p;
        r.y += y;
        agg.region_map.push_back(Region{RegionRole::demo_card, static_cast<int>(i), r});
    }
    y += demo_block.pixels.height() + p;

    raster::kernels::blit(agg.pixels, label_query, p, y);
    y += label_query.height() + p;

    raster::kernels::blit(agg.pixels, query_card, p, y);
    agg.region_map.push_back(
        Region{RegionRole::query_card, 0, Rect{p, y, query_card.width(), query_card.height()}});
    return agg;
}

AggregateImage scale_resolution(const AggregateImage& image, double ratio,
                                const LayoutStyle& style, std::vector<std::string>* warnings) {
    if (!(ratio > 0.0)) {
        throw DataError("scale_resolution: ratio must be positive");
    }
    const int w = image.pixels.width();
    const int h = image.pixels.height();
    const int long_side = std::max(w, h);
    double r = ratio;
    if (static_cast<double>(long_side) * r > style.max_long_side) {
        r = static_cast<double>(style.max_long_side) / long_side;
        if (warnings) {
            warnings->push_back("resolution ratio clamped to " + std::to_string(r) +
                                " to honor max_long_side");
        }
    }
    if (r == 1.0) {
        return AggregateImage{image.pixels, image.region_map};
    }
    const int nw = static_cast<int>(std::lround(r * w));
    const int nh = static_cast<int>(std::lround(r * h));
    if (nw <= 0 || nh <= 0) {
        throw DataError("scale_resolution: ratio produces a zero dimension");
    }

    AggregateImage out;
    out.pixels = raster::kernels::scale_nearest(image.pixels, nw, nh);
    out.region_map = image.region_map;
    for (auto& region : out.region_map) {
        // corners scale monotonically, so disjointness survives rounding
        const int x0 = static_cast<int>(std::lround(r * region.rect.x));
        const int y0 = static_cast<int>(std::lround(r * region.rect.y));
        const int x1 = static_cast<int>(std::lround(r * region.rect.right()));
        const int y1 = static_cast<int>(std::lround(r * region.rect.bottom()));
        region.rect = Rect{x0, y0, x1 - x0, y1 - y0};
    }
    return out;
}

AggregateImage build_aggregate(const std::vector<Demonstration>& demos,
                               const QueryInstance& query, LayoutOrder order, double ratio,
                               const LayoutStyle& style, bool include_cues, bool include_cot,
                               bool permute_query, std::vector<std::string>* warnings) {
    validate_style(style);
    if (demos.empty()) {
        throw DataError("build_aggregate: need at least one demonstration");
    }

    std::vector<Image> cards;
    cards.reserve(demos.size() + 1);
    for (const auto& demo : demos) {
        cards.push_back(render_demo_card(demo, style, include_cues, include_cot));
    }

    if (permute_query) {
        // Full-sequence permutation: the query card rides the same ordering
        // as the demonstrations instead of staying last; section labels are
        // dropped since the sections interleave.
        cards.push_back(render_query_card(query, style));
        ComposedBlock block = compose_demos(cards, order, style);
        const int p = style.padding;
        const int content_w = block.pixels.width();
        const Image banner =
            render_text_block(style.banner_text, content_w, banner_font_size(style), style);

        AggregateImage agg;
        agg.pixels = Image(content_w + 2 * p,
                           p + banner.height() + p + block.pixels.height() + p, style.background);
        int y = p;
        raster::kernels::blit(agg.pixels, banner, p, y);
        agg.region_map.push_back(
            Region{RegionRole::banner, 0, Rect{p, y, banner.width(), banner.height()}});
        y += banner.height() + p;
        raster::kernels::blit(agg.pixels, block.pixels, p, y);
        for (std::size_t i = 0; i < block.card_rects.size(); ++i) {
            Rect rect = block.card_rects[i];
            rect.x += p;
            rect.y += y;
            const bool is_query = i + 1 == block.card_rects.size();
            agg.region_map.push_back(Region{is_query ? RegionRole::query_card
                                                     : RegionRole::demo_card,
                                            is_query ? 0 : static_cast<int>(i), rect});
        }
        return scale_resolution(agg, ratio, style, warnings);
    }

    ComposedBlock block = compose_demos(cards, order, style);

    // Horizontal orders put the query below the demo row at the row's full
    // width; vertical orders reuse the card width.
    LayoutStyle query_style = style;
    if (!layout_order_is_vertical(order)) {
        query_style.card_width = std::max(style.card_width, block.pixels.width());
        query_style.max_long_side = std::max(style.max_long_side, query_style.card_width);
    }
    const Image query_card = render_query_card(query, query_style);

    AggregateImage agg = compose_aggregate(block, query_card, style);
    return scale_resolution(agg, ratio, style, warnings);
}

}  // namespace inimage
