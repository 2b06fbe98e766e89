// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inimage/cue_renderer.hpp"
#include "inimage/domain.hpp"
#include "inimage/raster/image.hpp"

namespace inimage {

// Geometry of the aggregated canvas. Card text rasterization parameters are
// nested as `text`.
struct LayoutStyle {
    int card_width = 768;
    int padding = 16;
    int separator_width = 2;
    std::string banner_text =
        "Learn from the demonstration examples to solve the following test example";
    std::pair<std::string, std::string> section_labels = {"Demonstration Example",
                                                          "Test Example"};
    int max_long_side = 2048;
    raster::Rgb background = raster::kWhite;
    RenderStyle text;

    bool operator==(const LayoutStyle&) const = default;
};

// Throws DataError unless card_width > 2*padding and max_long_side >= card_width.
void validate_style(const LayoutStyle& style);

enum class RegionRole { banner, demo_card, query_card };

std::string to_string(RegionRole r);

struct Region {
    RegionRole role = RegionRole::banner;
    int index = 0;  // demo_card ordinal; 0 otherwise
    raster::Rect rect;
    bool operator==(const Region&) const = default;
};

// The composed canvas plus the rectangle of every component on it.
struct AggregateImage {
    raster::Image pixels;
    std::vector<Region> region_map;
};

// Violations of the aggregate invariants (disjoint rectangles inside the
// canvas, exactly one banner and one query card).
std::vector<std::string> validate_aggregate(const AggregateImage& agg);

json region_map_to_json(const std::vector<Region>& regions);

// Wrapped text lines on the style background; the building block for banner
// and section labels, exposed so composition can be checked block-by-block.
raster::Image render_text_block(const std::string& text, int width, int font_size,
                                const LayoutStyle& style);

// One demonstration card: cue-applied image scaled to the content width, then
// question, reasoning (when present) and answer lines. Height is
// padding + image + padding + lines*line_height + padding.
raster::Image render_demo_card(const Demonstration& demo, const LayoutStyle& style,
                               bool include_cues = true, bool include_cot = true);

// Query card: the raw image (never cue-applied), the question, and enumerated
// choices for multiple-choice queries.
raster::Image render_query_card(const QueryInstance& query, const LayoutStyle& style);

struct ComposedBlock {
    raster::Image pixels;
    std::vector<raster::Rect> card_rects;  // rect of input card i, in input order
};

// Combines cards under the given order: T2B stacks list order top to bottom,
// B2T reverses the stacking, L2R/R2L run horizontally. Adjacent cards are
// separated by padding + separator line + padding.
ComposedBlock compose_demos(const std::vector<raster::Image>& cards, LayoutOrder order,
                            const LayoutStyle& style);

// Banner on top, demo section label, demo block, test section label, query
// card last. When `permute_query` the query card instead participates in the
// demo block's ordering (strict full-sequence permutation) and section labels
// are omitted.
AggregateImage compose_aggregate(const ComposedBlock& demo_block, const raster::Image& query_card,
                                 const LayoutStyle& style);

// Nearest-neighbor rescale of canvas and region map. Ratio 1 is the identity.
// A ratio pushing the long side over style.max_long_side is clamped (noted in
// `warnings`); a ratio producing a zero dimension throws.
AggregateImage scale_resolution(const AggregateImage& image, double ratio,
                                const LayoutStyle& style,
                                std::vector<std::string>* warnings = nullptr);

// Whole pipeline: cards, combination, aggregate, scaling.
AggregateImage build_aggregate(const std::vector<Demonstration>& demos,
                               const QueryInstance& query, LayoutOrder order, double ratio,
                               const LayoutStyle& style, bool include_cues = true,
                               bool include_cot = true, bool permute_query = false,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace inimage
