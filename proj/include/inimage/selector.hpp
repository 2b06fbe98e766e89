// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "inimage/domain.hpp"
#include "inimage/gateway.hpp"

namespace inimage {

// Verbatim rating instruction sent with the description and the image.
inline constexpr const char* kRatingPrompt =
    "The following is a description of the current image. Please rate it from 1 to 4 based on "
    "the comparison between this description and the image, with a higher score for more "
    "accurate descriptions and a lower score for more vague descriptions. Your answer MUST be "
    "in the format: `The rating is [YOUR SCORE]'. Please be CLEAR and DO NOT provide any "
    "additional outputs or information beyond the requested output.";

inline constexpr const char* kRatingReask =
    "Your answer MUST be in the format: `The rating is [YOUR SCORE]'.";

struct RoutingDecision {
    std::string query_id;
    std::string description;
    int score = 0;  // 0 when the rating was unparseable and the fallback fired
    double threshold = 1.5;
    PromptMode chosen_mode = PromptMode::I2L;
    bool fallback_used = false;
};

void to_json(json& j, const RoutingDecision& v);
void from_json(const json& j, RoutingDecision& v);

// Case-insensitive scan for "the rating is" followed by a score in {1..4};
// the first parseable in-range match wins. Decimal scores truncate ("2.0" ->
// 2); out-of-range or absent scores yield nullopt.
std::optional<int> parse_rating(const std::string& text);

// Score <= threshold routes to the aggregated-image mode, otherwise to
// interleaved mode with cue-applied demonstrations.
PromptMode route(int score, double threshold);

// Sends the rating prompt for (description, image). An unparseable response
// is re-asked once with the transcript plus a format reminder; a second
// failure raises RatingParseError carrying the raw text.
int rate(const ImagePart& image, const std::string& description, LmmGateway& gateway);

// Full describe -> rate -> threshold pipeline for one query. A rating parse
// failure routes to I2L with fallback_used set.
RoutingDecision decide_route(const QueryInstance& query, double threshold, LmmGateway& gateway);

}  // namespace inimage
