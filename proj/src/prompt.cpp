// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/prompt.hpp"

#include "inimage/cue_renderer.hpp"
#include "inimage/errors.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/util.hpp"

namespace inimage {

namespace {

std::string demo_question_block(const Demonstration& demo) {
    return "Question: " + demo.question;
}

std::string demo_answer_block(const Demonstration& demo) {
    std::string out;
    if (!demo.chain_of_thought.empty()) {
        out += "Reasoning: " + demo.chain_of_thought + "\n";
    }
    out += "The answer is " + demo.answer + ".";
    return out;
}

std::string query_block(const QueryInstance& query) {
    std::string out = "Question: " + query.question;
    if (query.answer_type == AnswerType::multiple_choice && query.choices) {
        out += "\nChoices:";
        for (std::size_t i = 0; i < query.choices->size(); ++i) {
            out += "\n(" + std::string(1, static_cast<char>('A' + i)) + ") " + (*query.choices)[i];
        }
    }
    out += "\n\n";
    out += kAnswerInstruction;
    return out;
}

const std::string& caption_for(const CaptionMap& captions, const std::string& image_id) {
    auto it = captions.find(image_id);
    if (it == captions.end()) {
        throw DataError("missing caption for image: " + image_id);
    }
    return it->second;
}

void push_text(ChatTurn& turn, std::string text) {
    turn.parts.push_back(TextPart{std::move(text)});
}

}  // namespace

std::string sanitize_caption(const std::string& caption) {
    std::string out;
    out.reserve(caption.size());
    for (char c : caption) {
        if (c != '\r') out.push_back(c);
    }
    return util::trim(out);
}

ImagePart resolve_image(const ImageRef& ref) {
    ImagePart part;
    part.format = ref.format;
    part.bytes = load_image_bytes(ref);
    return part;
}

std::vector<ChatTurn> build_t_icl(const std::vector<Demonstration>& demos,
                                  const QueryInstance& query) {
    ChatTurn turn{ChatRole::user, {}};
    for (const auto& demo : demos) {
        push_text(turn, demo_question_block(demo));
        push_text(turn, demo_answer_block(demo));
    }
    push_text(turn, query_block(query));
    return {turn};
}

std::vector<ChatTurn> build_t_icl_img(const std::vector<Demonstration>& demos,
                                      const CaptionMap& captions, const QueryInstance& query) {
    ChatTurn turn{ChatRole::user, {}};
    for (const auto& demo : demos) {
        push_text(turn, sanitize_caption(caption_for(captions, demo.id)));
        push_text(turn, demo_question_block(demo));
        push_text(turn, demo_answer_block(demo));
    }
    push_text(turn, sanitize_caption(caption_for(captions, query.id)));
    push_text(turn, query_block(query));
    return {turn};
}

std::vector<ChatTurn> build_vt_icl(const std::vector<Demonstration>& demos,
                                   const QueryInstance& query, bool with_cues,
                                   const RenderStyle& render_style) {
    if (demos.empty()) {
        throw DataError("build_vt_icl: need at least one demonstration");
    }
    ChatTurn turn{ChatRole::user, {}};
    for (const auto& demo : demos) {
        if (with_cues && !demo.cues.empty()) {
            const raster::Image edited = apply_cues(demo.image, demo.cues, render_style);
            turn.parts.push_back(ImagePart{ImageEncoding::png, raster::encode_png(edited)});
        } else {
            turn.parts.push_back(resolve_image(demo.image));
        }
        push_text(turn, demo_question_block(demo));
        push_text(turn, demo_answer_block(demo));
    }
    // the query image never carries cues
    turn.parts.push_back(resolve_image(query.image));
    push_text(turn, query_block(query));
    return {turn};
}

std::vector<ChatTurn> build_i2l(const AggregateImage& aggregate,
                                const std::string& extraction_instruction) {
    ChatTurn turn{ChatRole::user, {}};
    turn.parts.push_back(ImagePart{ImageEncoding::png, raster::encode_png(aggregate.pixels)});
    push_text(turn, extraction_instruction);
    return {turn};
}

ordered_json canonical_json(const std::vector<ChatTurn>& turns) {
    ordered_json jturns = ordered_json::array();
    for (const auto& turn : turns) {
        ordered_json jparts = ordered_json::array();
        for (const auto& part : turn.parts) {
            if (const auto* text = std::get_if<TextPart>(&part)) {
                jparts.push_back(ordered_json{{"type", "text"}, {"text", text->text}});
            } else {
                const auto& img = std::get<ImagePart>(part);
                jparts.push_back(ordered_json{{"type", "image"},
                                              {"format", to_string(img.format)},
                                              {"data_base64", util::base64_encode(img.bytes)}});
            }
        }
        jturns.push_back(ordered_json{{"role", to_string(turn.role)}, {"parts", jparts}});
    }
    return ordered_json{{"turns", jturns}};
}

std::string canonical_serialize(const std::vector<ChatTurn>& turns) {
    return canonical_json(turns).dump();
}

int count_image_parts(const std::vector<ChatTurn>& turns) {
    int n = 0;
    for (const auto& turn : turns) {
        for (const auto& part : turn.parts) {
            if (std::holds_alternative<ImagePart>(part)) ++n;
        }
    }
    return n;
}

}  // namespace inimage
