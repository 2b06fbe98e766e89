// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "inimage/domain.hpp"
#include "inimage/raster/image.hpp"

namespace inimage {

// Rasterization parameters for cue strokes and label text. Anti-aliasing is
// permanently off: strokes are integer-snapped so output is byte-deterministic.
struct RenderStyle {
    int font_size = 16;
    int label_padding = 2;
    static constexpr bool antialias = false;

    bool operator==(const RenderStyle&) const = default;
};

// Flags out-of-range geometry and labels whose glyph box would exit the
// canvas at its primary placement. Violations that merely trigger
// re-anchoring end with "will be re-anchored"; everything else rejects the
// cue set in apply_cues.
std::vector<std::string> validate_cues(const std::vector<CueAnnotation>& cues,
                                       const raster::Image& image,
                                       const RenderStyle& style = {});

// Subset of validate_cues that makes apply_cues reject.
std::vector<std::string> hard_cue_violations(const std::vector<CueAnnotation>& cues,
                                             const raster::Image& image,
                                             const RenderStyle& style = {});

// Applies cues in list order onto a copy of the image. Pixels outside stroke
// and glyph regions are untouched; equal inputs produce byte-equal buffers.
// Throws DataError naming the cue index on invalid geometry.
raster::Image apply_cues(const raster::Image& image, const std::vector<CueAnnotation>& cues,
                         const RenderStyle& style = {},
                         std::vector<std::string>* warnings = nullptr);

// Convenience overload: decodes the reference first (DecodeError on bad bytes).
raster::Image apply_cues(const ImageRef& image, const std::vector<CueAnnotation>& cues,
                         const RenderStyle& style = {},
                         std::vector<std::string>* warnings = nullptr);

// Conservative superset of the pixels a cue may touch, used by locality
// checks and tests. Rectangles are clipped to the canvas.
std::vector<raster::Rect> cue_touch_regions(const CueAnnotation& cue, const raster::Image& image,
                                            const RenderStyle& style = {});

}  // namespace inimage
