// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "inimage/raster/image.hpp"

namespace inimage {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Images

enum class ImageEncoding { png, jpeg };

std::string to_string(ImageEncoding f);
ImageEncoding image_encoding_from_string(const std::string& s);

// A reference to an image: either a file path (resolved relative to the
// document that contains it) or inline base64 bytes. Dimensions are declared
// and must match the decoded pixels.
struct ImageRef {
    std::filesystem::path path;        // empty when inline
    std::vector<std::uint8_t> inline_bytes;
    int width = 0;
    int height = 0;
    ImageEncoding format = ImageEncoding::png;

    bool is_inline() const { return !inline_bytes.empty(); }
    bool operator==(const ImageRef&) const = default;
};

// Reads the referenced bytes (inline buffer or file contents).
std::vector<std::uint8_t> load_image_bytes(const ImageRef& ref);

// ---------------------------------------------------------------------------
// Cues

enum class CueKind { bounding_box, text_label, line, arrow };

std::string to_string(CueKind k);
CueKind cue_kind_from_string(const std::string& s);

// One declarative visual cue in normalized [0,1]^2 coordinates. Boxes, lines
// and arrows use (x0,y0)-(x1,y1); labels anchor at (x0,y0).
struct CueAnnotation {
    CueKind kind = CueKind::bounding_box;
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
    raster::Rgb stroke_color{255, 0, 0};
    int stroke_width = 3;
    std::optional<std::string> text;

    bool operator==(const CueAnnotation&) const = default;
};

// Structural violations of a single cue, prefixed `cues[i]: ` by callers.
std::vector<std::string> validate_cue(const CueAnnotation& cue);

// ---------------------------------------------------------------------------
// Demonstrations and queries

struct Demonstration {
    std::string id;
    ImageRef image;
    std::string question;
    std::vector<CueAnnotation> cues;
    std::string chain_of_thought;
    std::string answer;
    std::string task_tag;

    bool operator==(const Demonstration&) const = default;
};

std::vector<std::string> validate_demonstration(const Demonstration& demo);

enum class AnswerType { multiple_choice, free_form_text, integer_value, float_value };

std::string to_string(AnswerType t);
AnswerType answer_type_from_string(const std::string& s);

struct QueryInstance {
    std::string id;
    ImageRef image;
    std::string question;
    AnswerType answer_type = AnswerType::free_form_text;
    std::optional<std::vector<std::string>> choices;
    std::optional<int> precision;
    std::optional<std::string> ground_truth;
    std::string task_type;
    std::vector<std::string> reasoning_types;

    bool operator==(const QueryInstance&) const = default;
};

std::vector<std::string> validate_query(const QueryInstance& query);

// ---------------------------------------------------------------------------
// Layout order and prompt modes

enum class LayoutOrder { T2B, B2T, L2R, R2L };

std::string to_string(LayoutOrder o);
LayoutOrder layout_order_from_string(const std::string& s);
bool layout_order_is_vertical(LayoutOrder o);

enum class PromptMode { T_ICL, T_ICL_IMG, VT_ICL, VT_ICL_CUES, I2L, I2L_HYBRID };

std::string to_string(PromptMode m);
PromptMode prompt_mode_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Chat turns

enum class ChatRole { system, user, assistant };

std::string to_string(ChatRole r);
ChatRole chat_role_from_string(const std::string& s);

struct TextPart {
    std::string text;
    bool operator==(const TextPart&) const = default;
};

// Resolved image content (not a reference) so prompts are hermetic.
struct ImagePart {
    ImageEncoding format = ImageEncoding::png;
    std::vector<std::uint8_t> bytes;
    bool operator==(const ImagePart&) const = default;
};

using ChatPart = std::variant<TextPart, ImagePart>;

struct ChatTurn {
    ChatRole role = ChatRole::user;
    std::vector<ChatPart> parts;
    bool operator==(const ChatTurn&) const = default;
};

// ---------------------------------------------------------------------------
// JSON (schemas documented in docs/formats.md)

void to_json(json& j, const ImageRef& v);
void from_json(const json& j, ImageRef& v);
void to_json(json& j, const CueAnnotation& v);
void from_json(const json& j, CueAnnotation& v);
void to_json(json& j, const Demonstration& v);
void from_json(const json& j, Demonstration& v);
void to_json(json& j, const QueryInstance& v);
void from_json(const json& j, QueryInstance& v);

}  // namespace inimage
