// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "inimage/domain.hpp"
#include "inimage/layout.hpp"

namespace inimage {

// Appended to the query block of every mode so extraction has one sentinel.
inline constexpr const char* kAnswerInstruction =
    "Answer the test example. End your response with \"The answer is X\".";

struct CaptionRecord {
    std::string image_id;
    std::string caption;
    bool operator==(const CaptionRecord&) const = default;
};

using CaptionMap = std::map<std::string, std::string>;  // image id -> caption

// Whitespace-normalizing sanitization applied to injected captions; the
// caption text itself is never escaped.
std::string sanitize_caption(const std::string& caption);

// Resolves a reference to hermetic image content (reads the file when the
// ref is path-based).
ImagePart resolve_image(const ImageRef& ref);

// Text-only prompt: per demo, question then reasoning+answer; the query block
// (question, choices, answer instruction) last. k = 0 degenerates to the
// query block alone.
std::vector<ChatTurn> build_t_icl(const std::vector<Demonstration>& demos,
                                  const QueryInstance& query);

// Caption-augmented text prompt: per demo, caption then question then
// reasoning+answer; query caption then query block. Throws DataError naming
// the image id when a caption is missing.
std::vector<ChatTurn> build_t_icl_img(const std::vector<Demonstration>& demos,
                                      const CaptionMap& captions, const QueryInstance& query);

// Interleaved prompt: per demo, image part (cue-applied iff with_cues) then
// question then reasoning+answer; then the raw query image and query block.
std::vector<ChatTurn> build_vt_icl(const std::vector<Demonstration>& demos,
                                   const QueryInstance& query, bool with_cues,
                                   const RenderStyle& render_style = {});

// Single aggregated image plus one short extraction instruction.
std::vector<ChatTurn> build_i2l(const AggregateImage& aggregate,
                                const std::string& extraction_instruction = kAnswerInstruction);

// Canonical serialization: stable field order, compact separators, base64
// image payloads. Equal prompts serialize to equal bytes.
ordered_json canonical_json(const std::vector<ChatTurn>& turns);
std::string canonical_serialize(const std::vector<ChatTurn>& turns);

int count_image_parts(const std::vector<ChatTurn>& turns);

}  // namespace inimage
