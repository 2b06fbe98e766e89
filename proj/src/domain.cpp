// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/domain.hpp"

#include "inimage/errors.hpp"
#include "inimage/util.hpp"

namespace inimage {

std::string to_string(ImageEncoding f) {
    return f == ImageEncoding::png ? "png" : "jpeg";
}

ImageEncoding image_encoding_from_string(const std::string& s) {
    if (s == "png") return ImageEncoding::png;
    if (s == "jpeg" || s == "jpg") return ImageEncoding::jpeg;
    throw DataError("unknown image format: " + s);
}

std::vector<std::uint8_t> load_image_bytes(const ImageRef& ref) {
    if (ref.is_inline()) return ref.inline_bytes;
    if (ref.path.empty()) throw DataError("image ref has neither path nor inline bytes");
    return util::read_file(ref.path);
}

std::string to_string(CueKind k) {
    switch (k) {
        case CueKind::bounding_box: return "bounding_box";
        case CueKind::text_label: return "text_label";
        case CueKind::line: return "line";
        case CueKind::arrow: return "arrow";
    }
    return "?";
}

CueKind cue_kind_from_string(const std::string& s) {
    if (s == "bounding_box") return CueKind::bounding_box;
    if (s == "text_label") return CueKind::text_label;
    if (s == "line") return CueKind::line;
    if (s == "arrow") return CueKind::arrow;
    throw DataError("unknown cue kind: " + s);
}

std::vector<std::string> validate_cue(const CueAnnotation& cue) {
    std::vector<std::string> out;
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    const bool is_label = cue.kind == CueKind::text_label;
    if (!in_unit(cue.x0) || !in_unit(cue.y0) || (!is_label && (!in_unit(cue.x1) || !in_unit(cue.y1)))) {
        out.push_back("coordinates must lie in [0,1]");
    }
    if (cue.kind == CueKind::bounding_box) {
        if (!(cue.x0 < cue.x1)) out.push_back("box requires x0 < x1");
        if (!(cue.y0 < cue.y1)) out.push_back("box requires y0 < y1");
    }
    if (is_label && (!cue.text || cue.text->empty())) {
        out.push_back("text_label requires non-empty text");
    }
    if (cue.stroke_width < 1) {
        out.push_back("stroke_width must be >= 1");
    }
    return out;
}

std::vector<std::string> validate_demonstration(const Demonstration& demo) {
    std::vector<std::string> out;
    if (demo.image.width < 1 || demo.image.height < 1) {
        out.push_back("image: dimensions must be >= 1");
    }
    for (std::size_t i = 0; i < demo.cues.size(); ++i) {
        for (const auto& v : validate_cue(demo.cues[i])) {
            out.push_back("cues[" + std::to_string(i) + "]: " + v);
        }
    }
    if (demo.answer.empty()) {
        out.push_back("answer: must be non-empty");
    }
    return out;
}

std::string to_string(AnswerType t) {
    switch (t) {
        case AnswerType::multiple_choice: return "multiple_choice";
        case AnswerType::free_form_text: return "free_form_text";
        case AnswerType::integer_value: return "integer";
        case AnswerType::float_value: return "float";
    }
    return "?";
}

AnswerType answer_type_from_string(const std::string& s) {
    if (s == "multiple_choice") return AnswerType::multiple_choice;
    if (s == "free_form_text" || s == "text") return AnswerType::free_form_text;
    if (s == "integer") return AnswerType::integer_value;
    if (s == "float") return AnswerType::float_value;
    throw DataError("unknown answer type: " + s);
}

std::vector<std::string> validate_query(const QueryInstance& query) {
    std::vector<std::string> out;
    if (query.image.width < 1 || query.image.height < 1) {
        out.push_back("image: dimensions must be >= 1");
    }
    if (query.answer_type == AnswerType::multiple_choice) {
        if (!query.choices || query.choices->size() < 2) {
            out.push_back("choices: multiple_choice requires at least 2 choices");
        } else if (query.ground_truth) {
            bool found = false;
            for (const auto& c : *query.choices) {
                if (c == *query.ground_truth) found = true;
            }
            if (!found) out.push_back("ground_truth: must be one of the choices");
        }
    }
    if (query.answer_type == AnswerType::float_value && !query.precision) {
        out.push_back("precision: required for float answers");
    }
    if (query.precision && *query.precision < 0) {
        out.push_back("precision: must be non-negative");
    }
    return out;
}

std::string to_string(LayoutOrder o) {
    switch (o) {
        case LayoutOrder::T2B: return "T2B";
        case LayoutOrder::B2T: return "B2T";
        case LayoutOrder::L2R: return "L2R";
        case LayoutOrder::R2L: return "R2L";
    }
    return "?";
}

LayoutOrder layout_order_from_string(const std::string& s) {
    const std::string u = util::to_lower(s);
    if (u == "t2b") return LayoutOrder::T2B;
    if (u == "b2t") return LayoutOrder::B2T;
    if (u == "l2r") return LayoutOrder::L2R;
    if (u == "r2l") return LayoutOrder::R2L;
    throw DataError("unknown layout order: " + s);
}

bool layout_order_is_vertical(LayoutOrder o) {
    return o == LayoutOrder::T2B || o == LayoutOrder::B2T;
}

std::string to_string(PromptMode m) {
    switch (m) {
        case PromptMode::T_ICL: return "t_icl";
        case PromptMode::T_ICL_IMG: return "t_icl_img";
        case PromptMode::VT_ICL: return "vt_icl";
        case PromptMode::VT_ICL_CUES: return "vt_icl_cues";
        case PromptMode::I2L: return "i2l";
        case PromptMode::I2L_HYBRID: return "i2l_hybrid";
    }
    return "?";
}

PromptMode prompt_mode_from_string(const std::string& s) {
    const std::string u = util::to_lower(s);
    if (u == "t_icl") return PromptMode::T_ICL;
    if (u == "t_icl_img") return PromptMode::T_ICL_IMG;
    if (u == "vt_icl") return PromptMode::VT_ICL;
    if (u == "vt_icl_cues") return PromptMode::VT_ICL_CUES;
    if (u == "i2l") return PromptMode::I2L;
    if (u == "i2l_hybrid") return PromptMode::I2L_HYBRID;
    throw DataError("unknown prompt mode: " + s);
}

std::string to_string(ChatRole r) {
    switch (r) {
        case ChatRole::system: return "system";
        case ChatRole::user: return "user";
        case ChatRole::assistant: return "assistant";
    }
    return "?";
}

ChatRole chat_role_from_string(const std::string& s) {
    if (s == "system") return ChatRole::system;
    if (s == "user") return ChatRole::user;
    if (s == "assistant") return ChatRole::assistant;
    throw DataError("unknown chat role: " + s);
}

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const ImageRef& v) {
    j = json::object();
    if (v.is_inline()) {
        j["data_base64"] = util::base64_encode(v.inline_bytes);
    } else {
        j["path"] = v.path.generic_string();
    }
    j["width"] = v.width;
    j["height"] = v.height;
    j["format"] = to_string(v.format);
}

void from_json(const json& j, ImageRef& v) {
    v = ImageRef{};
    if (j.contains("data_base64")) {
        v.inline_bytes = util::base64_decode(j.at("data_base64").get<std::string>());
    } else if (j.contains("path")) {
        v.path = std::filesystem::path(j.at("path").get<std::string>());
    } else {
        throw DataError("image ref needs 'path' or 'data_base64'");
    }
    v.width = j.at("width").get<int>();
    v.height = j.at("height").get<int>();
    v.format = image_encoding_from_string(j.at("format").get<std::string>());
}

void to_json(json& j, const CueAnnotation& v) {
    j = json::object();
    j["kind"] = to_string(v.kind);
    if (v.kind == CueKind::text_label) {
        j["x"] = v.x0;
        j["y"] = v.y0;
    } else {
        j["x0"] = v.x0;
        j["y0"] = v.y0;
        j["x1"] = v.x1;
        j["y1"] = v.y1;
    }
    j["stroke_color"] = json::array({v.stroke_color.r, v.stroke_color.g, v.stroke_color.b});
    j["stroke_width"] = v.stroke_width;
    if (v.text) j["text"] = *v.text;
}

void from_json(const json& j, CueAnnotation& v) {
    v = CueAnnotation{};
    v.kind = cue_kind_from_string(j.at("kind").get<std::string>());
    if (v.kind == CueKind::text_label) {
        v.x0 = j.at("x").get<double>();
        v.y0 = j.at("y").get<double>();
    } else {
        v.x0 = j.at("x0").get<double>();
        v.y0 = j.at("y0").get<double>();
        v.x1 = j.at("x1").get<double>();
        v.y1 = j.at("y1").get<double>();
    }
    if (j.contains("stroke_color")) {
        const auto& c = j.at("stroke_color");
        v.stroke_color = raster::Rgb{c.at(0).get<std::uint8_t>(), c.at(1).get<std::uint8_t>(),
                                     c.at(2).get<std::uint8_t>()};
    }
    if (j.contains("stroke_width")) v.stroke_width = j.at("stroke_width").get<int>();
    if (j.contains("text")) v.text = j.at("text").get<std::string>();
}

void to_json(json& j, const Demonstration& v) {
    j = json{{"id", v.id},
             {"image", v.image},
             {"question", v.question},
             {"cues", v.cues},
             {"chain_of_thought", v.chain_of_thought},
             {"answer", v.answer},
             {"task_tag", v.task_tag}};
}

void from_json(const json& j, Demonstration& v) {
    v = Demonstration{};
    v.id = j.at("id").get<std::string>();
    v.image = j.at("image").get<ImageRef>();
    v.question = j.at("question").get<std::string>();
    if (j.contains("cues")) v.cues = j.at("cues").get<std::vector<CueAnnotation>>();
    if (j.contains("chain_of_thought")) v.chain_of_thought = j.at("chain_of_thought").get<std::string>();
    v.answer = j.at("answer").get<std::string>();
    if (j.contains("task_tag")) v.task_tag = j.at("task_tag").get<std::string>();
}

void to_json(json& j, const QueryInstance& v) {
    j = json{{"id", v.id},
             {"image", v.image},
             {"question", v.question},
             {"answer_type", to_string(v.answer_type)},
             {"task_type", v.task_type},
             {"reasoning_types", v.reasoning_types}};
    if (v.choices) j["choices"] = *v.choices;
    if (v.precision) j["precision"] = *v.precision;
    if (v.ground_truth) j["ground_truth"] = *v.ground_truth;
}

void from_json(const json& j, QueryInstance& v) {
    v = QueryInstance{};
    v.id = j.at("id").get<std::string>();
    v.image = j.at("image").get<ImageRef>();
    v.question = j.at("question").get<std::string>();
    v.answer_type = answer_type_from_string(j.at("answer_type").get<std::string>());
    if (j.contains("choices") && !j.at("choices").is_null()) {
        v.choices = j.at("choices").get<std::vector<std::string>>();
    }
    if (j.contains("precision") && !j.at("precision").is_null()) {
        v.precision = j.at("precision").get<int>();
    }
    if (j.contains("ground_truth") && !j.at("ground_truth").is_null()) {
        v.ground_truth = j.at("ground_truth").get<std::string>();
    }
    if (j.contains("task_type")) v.task_type = j.at("task_type").get<std::string>();
    if (j.contains("reasoning_types")) {
        v.reasoning_types = j.at("reasoning_types").get<std::vector<std::string>>();
    }
}

}  // namespace inimage
