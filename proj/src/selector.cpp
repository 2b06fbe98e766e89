// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/selector.hpp"

#include <cctype>

#include "inimage/errors.hpp"
#include "inimage/util.hpp"

namespace inimage {

void to_json(json& j, const RoutingDecision& v) {
    j = json{{"query_id", v.query_id},
             {"description", v.description},
             {"score", v.score},
             {"threshold", v.threshold},
             {"chosen_mode", to_string(v.chosen_mode)},
             {"fallback_used", v.fallback_used}};
}

void from_json(const json& j, RoutingDecision& v) {
    v = RoutingDecision{};
    v.query_id = j.at("query_id").get<std::string>();
    v.description = j.at("description").get<std::string>();
    v.score = j.at("score").get<int>();
    v.threshold = j.at("threshold").get<double>();
    v.chosen_mode = prompt_mode_from_string(j.at("chosen_mode").get<std::string>());
    v.fallback_used = j.at("fallback_used").get<bool>();
}

std::optional<int> parse_rating(const std::string& text) {
    const std::string lower = util::to_lower(text);
    static constexpr std::string_view needle = "the rating is";
    std::size_t pos = 0;
    while ((pos = lower.find(needle, pos)) != std::string::npos) {
        std::size_t i = pos + needle.size();
        // skip separators and opening brackets or quotes before the digits
        while (i < lower.size() &&
               (std::isspace(static_cast<unsigned char>(lower[i])) || lower[i] == ':' ||
                lower[i] == '[' || lower[i] == '(' || lower[i] == '\'' || lower[i] == '"' ||
                lower[i] == '`' || lower[i] == '*')) {
            ++i;
        }
        std::size_t digits = 0;
        long value = 0;
        while (i < lower.size() && std::isdigit(static_cast<unsigned char>(lower[i])) &&
               digits < 9) {
            value = value * 10 + (lower[i] - '0');
            ++i;
            ++digits;
        }
        if (digits > 0) {
            // a fractional part truncates: "2.0" scores 2
            if (value >= 1 && value <= 4) return static_cast<int>(value);
        }
        pos += needle.size();
    }
    return std::nullopt;
}

PromptMode route(int score, double threshold) {
    if (score < 1 || score > 4) {
        throw DataError("route: score must be in {1,2,3,4}");
    }
    return static_cast<double>(score) <= threshold ? PromptMode::I2L : PromptMode::VT_ICL_CUES;
}

namespace {

std::vector<ChatTurn> rating_turns(const ImagePart& image, const std::string& description) {
    ChatTurn turn{ChatRole::user, {}};
    turn.parts.push_back(TextPart{std::string(kRatingPrompt) + "\n" + description});
    turn.parts.push_back(image);
    return {turn};
}

}  // namespace

int rate(const ImagePart& image, const std::string& description, LmmGateway& gateway) {
    if (description.empty()) {
        throw DataError("rate: description must be non-empty");
    }
    std::vector<ChatTurn> turns = rating_turns(image, description);
    const LmmResponse first = gateway.complete(turns);
    if (auto score = parse_rating(first.text)) {
        return *score;
    }
    // One re-ask with the transcript and a format reminder.
    turns.push_back(ChatTurn{ChatRole::assistant, {TextPart{first.text}}});
    turns.push_back(ChatTurn{ChatRole::user, {TextPart{kRatingReask}}});
    const LmmResponse second = gateway.complete(turns);
    if (auto score = parse_rating(second.text)) {
        return *score;
    }
    throw RatingParseError(second.text);
}

RoutingDecision decide_route(const QueryInstance& query, double threshold, LmmGateway& gateway) {
    const ImagePart image = resolve_image(query.image);
    const CaptionRecord caption = gateway.caption(image, query.id);

    RoutingDecision decision;
    decision.query_id = query.id;
    decision.description = caption.caption;
    decision.threshold = threshold;
    try {
        decision.score = rate(image, caption.caption, gateway);
        decision.chosen_mode = route(decision.score, threshold);
    } catch (const RatingParseError&) {
        // undescribable-by-model behaves like hard-to-describe
        decision.score = 0;
        decision.chosen_mode = PromptMode::I2L;
        decision.fallback_used = true;
    }
    return decision;
}

}  // namespace inimage
