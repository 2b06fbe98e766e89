// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "inimage/errors.hpp"
#include "inimage/prompt.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/util.hpp"

namespace inimage {

const std::vector<std::string> kTaskTypeCodes = {"FQA", "GPS", "MWP", "TQA", "VQA"};
const std::vector<std::string> kReasoningTypeCodes = {"ALG", "ARI", "GEO", "LOG",
                                                      "NUM", "SCI", "STA"};

std::string normalize_subset_tag(const std::string& tag) {
    static const std::map<std::string, std::string> names = {
        {"figure question answering", "FQA"},
        {"geometry problem solving", "GPS"},
        {"math word problem", "MWP"},
        {"textbook question answering", "TQA"},
        {"visual question answering", "VQA"},
        {"algebraic reasoning", "ALG"},
        {"arithmetic reasoning", "ARI"},
        {"geometry reasoning", "GEO"},
        {"logical reasoning", "LOG"},
        {"numeric commonsense", "NUM"},
        {"numeric common sense", "NUM"},
        {"scientific reasoning", "SCI"},
        {"statistical reasoning", "STA"},
    };
    auto it = names.find(util::to_lower(util::trim(tag)));
    if (it != names.end()) return it->second;
    return util::trim(tag);
}

void validate_run_config(const RunConfig& config) {
    if (config.num_demos < 0) throw DataError("run config: k must be >= 0");
    const bool needs_demo = config.mode == PromptMode::I2L || config.mode == PromptMode::VT_ICL ||
                            config.mode == PromptMode::VT_ICL_CUES ||
                            config.mode == PromptMode::I2L_HYBRID;
    if (needs_demo && config.num_demos < 1) {
        throw DataError("run config: mode " + to_string(config.mode) + " requires k >= 1");
    }
    if (!(config.resolution_ratio > 0.0)) {
        throw DataError("run config: resolution_ratio must be positive");
    }
    validate_style(config.layout);
    validate_config(config.gateway);
}

json run_config_snapshot(const RunConfig& config) {
    return json{{"mode", to_string(config.mode)},
                {"num_demos", config.num_demos},
                {"layout_order", to_string(config.layout_order)},
                {"resolution_ratio", config.resolution_ratio},
                {"threshold", config.threshold},
                {"seed", config.seed},
                {"dataset_path", config.dataset_path.generic_string()},
                {"demo_pool_path", config.demo_pool_path.generic_string()},
                {"include_cues", config.include_cues},
                {"include_cot", config.include_cot},
                {"permute_query", config.permute_query},
                {"gateway",
                 json{{"backend", to_string(config.gateway.backend)},
                      {"model_id", config.gateway.model_id},
                      {"temperature", config.gateway.temperature},
                      {"max_output_tokens", config.gateway.max_output_tokens}}},
                {"layout",
                 json{{"card_width", config.layout.card_width},
                      {"padding", config.layout.padding},
                      {"separator_width", config.layout.separator_width},
                      {"max_long_side", config.layout.max_long_side},
                      {"font_size", config.layout.text.font_size}}},
                {"price_per_1k_prompt_tokens", config.price_per_1k_prompt_tokens},
                {"price_per_1k_completion_tokens", config.price_per_1k_completion_tokens}};
}

void to_json(json& j, const EvalRecord& v) {
    j = json{{"query_id", v.query_id},
             {"mode_used", to_string(v.mode_used)},
             {"prompt_digest", v.prompt_digest},
             {"raw_response", v.raw_response},
             {"extracted_answer", v.extracted_answer},
             {"correct", v.correct ? json(*v.correct) : json(nullptr)},
             {"routing", v.routing ? json(*v.routing) : json(nullptr)},
             {"prompt_tokens", v.prompt_tokens},
             {"completion_tokens", v.completion_tokens},
             {"error_tag", v.error_tag ? json(*v.error_tag) : json(nullptr)}};
}

void from_json(const json& j, EvalRecord& v) {
    v = EvalRecord{};
    v.query_id = j.at("query_id").get<std::string>();
    v.mode_used = prompt_mode_from_string(j.at("mode_used").get<std::string>());
    v.prompt_digest = j.at("prompt_digest").get<std::string>();
    v.raw_response = j.at("raw_response").get<std::string>();
    v.extracted_answer = j.at("extracted_answer").get<std::string>();
    if (!j.at("correct").is_null()) v.correct = j.at("correct").get<bool>();
    if (!j.at("routing").is_null()) v.routing = j.at("routing").get<RoutingDecision>();
    v.prompt_tokens = j.at("prompt_tokens").get<long>();
    v.completion_tokens = j.at("completion_tokens").get<long>();
    if (!j.at("error_tag").is_null()) v.error_tag = j.at("error_tag").get<std::string>();
}

namespace {

json subset_to_json(const std::map<std::string, SubsetStat>& stats) {
    json out = json::object();
    for (const auto& [key, stat] : stats) {
        out[key] = json{{"correct", stat.correct},
                        {"count", stat.count},
                        {"accuracy_pct", stat.accuracy_pct()}};
    }
    return out;
}

std::map<std::string, SubsetStat> subset_from_json(const json& j) {
    std::map<std::string, SubsetStat> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out[it.key()] =
            SubsetStat{it.value().at("correct").get<long>(), it.value().at("count").get<long>()};
    }
    return out;
}

}  // namespace

json report_to_json(const RunReport& report) {
    return json{{"config", report.config_snapshot},
                {"n_items", report.n_items},
                {"overall",
                 json{{"correct", report.overall.correct},
                      {"count", report.overall.count},
                      {"accuracy_pct", report.overall.accuracy_pct()}}},
                {"per_task_type", subset_to_json(report.per_task_type)},
                {"per_reasoning_type", subset_to_json(report.per_reasoning_type)},
                {"routing_stats",
                 json{{"decisions", report.routing_decisions},
                      {"i2l_count", report.routing_i2l},
                      {"i2l_fraction", report.i2l_fraction()},
                      {"fallbacks", report.routing_fallbacks}}},
                {"tokens",
                 json{{"prompt", report.total_prompt_tokens},
                      {"completion", report.total_completion_tokens}}},
                {"cost", report.total_cost},
                {"records", report.records}};
}

RunReport report_from_json(const json& j) {
    RunReport report;
    report.config_snapshot = j.at("config");
    report.n_items = j.at("n_items").get<long>();
    report.overall = SubsetStat{j.at("overall").at("correct").get<long>(),
                                j.at("overall").at("count").get<long>()};
    report.per_task_type = subset_from_json(j.at("per_task_type"));
    report.per_reasoning_type = subset_from_json(j.at("per_reasoning_type"));
    report.routing_decisions = j.at("routing_stats").at("decisions").get<long>();
    report.routing_i2l = j.at("routing_stats").at("i2l_count").get<long>();
    report.routing_fallbacks = j.at("routing_stats").at("fallbacks").get<long>();
    report.total_prompt_tokens = j.at("tokens").at("prompt").get<long>();
    report.total_completion_tokens = j.at("tokens").at("completion").get<long>();
    report.total_cost = j.at("cost").get<double>();
    report.records = j.at("records").get<std::vector<EvalRecord>>();
    return report;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

void resolve_relative(ImageRef& ref, const std::filesystem::path& base) {
    if (!ref.is_inline() && ref.path.is_relative()) {
        ref.path = base / ref.path;
    }
}

void check_image_exists(const ImageRef& ref, std::vector<std::string>& errors,
                        const std::string& context) {
    if (ref.is_inline()) {
        try {
            const raster::Image img = raster::decode_image(ref.inline_bytes);
            if (img.width() != ref.width || img.height() != ref.height) {
                errors.push_back(context + ": inline image decodes to " +
                                 std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                                 ", declared " + std::to_string(ref.width) + "x" +
                                 std::to_string(ref.height));
            }
        } catch (const Error& e) {
            errors.push_back(context + ": " + e.what());
        }
        return;
    }
    if (!std::filesystem::exists(ref.path)) {
        errors.push_back(context + ": missing image file " + ref.path.generic_string());
    }
}

QueryInstance query_from_mathvista(const json& record, const std::string& fallback_id,
                                   const std::filesystem::path& base) {
    QueryInstance q;
    q.id = record.value("pid", fallback_id);
    q.question = record.at("question").get<std::string>();

    const std::string question_type = record.value("question_type", "");
    const std::string answer_type = record.value("answer_type", "text");
    if (question_type == "multi_choice") {
        q.answer_type = AnswerType::multiple_choice;
        q.choices = record.at("choices").get<std::vector<std::string>>();
    } else if (answer_type == "integer") {
        q.answer_type = AnswerType::integer_value;
    } else if (answer_type == "float") {
        q.answer_type = AnswerType::float_value;
    } else {
        q.answer_type = AnswerType::free_form_text;
    }
    if (record.contains("precision") && !record.at("precision").is_null()) {
        q.precision = static_cast<int>(record.at("precision").get<double>());
    }
    if (record.contains("answer") && !record.at("answer").is_null()) {
        q.ground_truth = record.at("answer").is_string()
                             ? record.at("answer").get<std::string>()
                             : record.at("answer").dump();
    }
    if (record.contains("metadata")) {
        const auto& meta = record.at("metadata");
        q.task_type = normalize_subset_tag(meta.value("task", ""));
        if (meta.contains("skills")) {
            for (const auto& skill : meta.at("skills")) {
                q.reasoning_types.push_back(normalize_subset_tag(skill.get<std::string>()));
            }
        }
    }

    q.image.path = record.at("image").get<std::string>();
    resolve_relative(q.image, base);
    // MathVista records do not declare dimensions; read them from the pixels.
    const raster::Image img = raster::decode_image(util::read_file(q.image.path));
    q.image.width = img.width();
    q.image.height = img.height();
    const auto ext = util::to_lower(q.image.path.extension().string());
    q.image.format = (ext == ".jpg" || ext == ".jpeg") ? ImageEncoding::jpeg : ImageEncoding::png;
    return q;
}

}  // namespace

std::vector<QueryInstance> load_dataset(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw DataError("dataset manifest not found: " + path.generic_string());
    }
    const auto base = path.parent_path();
    std::vector<QueryInstance> out;
    std::vector<std::string> errors;

    if (util::to_lower(path.extension().string()) == ".jsonl") {
        std::istringstream in(util::read_text_file(path));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (util::trim(line).empty()) continue;
            const std::string context = "line " + std::to_string(lineno);
            try {
                QueryInstance q = json::parse(line).get<QueryInstance>();
                resolve_relative(q.image, base);
                for (const auto& v : validate_query(q)) {
                    errors.push_back(context + " (" + q.id + "): " + v);
                }
                check_image_exists(q.image, errors, context + " (" + q.id + ")");
                q.task_type = normalize_subset_tag(q.task_type);
                for (auto& tag : q.reasoning_types) tag = normalize_subset_tag(tag);
                out.push_back(std::move(q));
            } catch (const json::exception& e) {
                errors.push_back(context + ": " + e.what());
            } catch (const Error& e) {
                errors.push_back(context + ": " + e.what());
            }
        }
    } else {
        const json doc = json::parse(util::read_text_file(path));
        auto consume = [&](const json& record, const std::string& fallback_id) {
            try {
                QueryInstance q = query_from_mathvista(record, fallback_id, base);
                for (const auto& v : validate_query(q)) {
                    errors.push_back(q.id + ": " + v);
                }
                out.push_back(std::move(q));
            } catch (const json::exception& e) {
                errors.push_back(fallback_id + ": " + e.what());
            } catch (const Error& e) {
                errors.push_back(fallback_id + ": " + e.what());
            }
        };
        if (doc.is_array()) {
            for (std::size_t i = 0; i < doc.size(); ++i) {
                consume(doc[i], std::to_string(i + 1));
            }
        } else if (doc.is_object()) {
            for (auto it = doc.begin(); it != doc.end(); ++it) {
                consume(it.value(), it.key());
            }
        } else {
            throw DataError("dataset document must be a JSON array or object: " +
                            path.generic_string());
        }
    }

    if (!errors.empty()) {
        std::string msg = "dataset load failed (" + std::to_string(errors.size()) + " errors):";
        for (const auto& e : errors) msg += "\n  " + e;
        throw DataError(msg);
    }
    return out;
}

std::vector<Demonstration> load_demo_pool(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw DataError("demo pool not found: " + path.generic_string());
    }
    const json doc = json::parse(util::read_text_file(path));
    if (!doc.contains("demonstrations")) {
        throw DataError("demo pool must contain a 'demonstrations' array");
    }
    const auto base = path.parent_path();
    std::vector<Demonstration> out;
    std::vector<std::string> errors;
    std::set<std::string> seen_ids;
    for (const auto& jd : doc.at("demonstrations")) {
        try {
            Demonstration d = jd.get<Demonstration>();
            resolve_relative(d.image, base);
            if (!seen_ids.insert(d.id).second) {
                errors.push_back(d.id + ": duplicate demonstration id");
            }
            for (const auto& v : validate_demonstration(d)) {
                errors.push_back(d.id + ": " + v);
            }
            check_image_exists(d.image, errors, d.id);
            out.push_back(std::move(d));
        } catch (const json::exception& e) {
            errors.push_back(std::string("record: ") + e.what());
        }
    }
    if (!errors.empty()) {
        std::string msg = "demo pool load failed (" + std::to_string(errors.size()) + " errors):";
        for (const auto& e : errors) msg += "\n  " + e;
        throw DataError(msg);
    }
    return out;
}

std::vector<Demonstration> select_demonstrations(const std::vector<Demonstration>& pool,
                                                 const std::string& task_tag, int k,
                                                 std::uint64_t seed) {
    if (k == 0) return {};
    if (pool.empty()) throw DataError("select_demonstrations: empty pool");

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].task_tag == task_tag) candidates.push_back(i);
    }
    if (candidates.size() < static_cast<std::size_t>(k)) {
        candidates.resize(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) candidates[i] = i;
    }
    if (candidates.size() < static_cast<std::size_t>(k)) {
        throw DataError("select_demonstrations: pool has " + std::to_string(candidates.size()) +
                        " demos, need " + std::to_string(k));
    }

    // partial Fisher-Yates; modulo draw keeps the choice platform-stable
    std::mt19937_64 rng(seed);
    std::vector<Demonstration> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
        out.push_back(pool[candidates[i]]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extraction and scoring

namespace {

std::string strip_terminal_punct(std::string s) {
    while (!s.empty() && (s.back() == '.' || s.back() == ',' || s.back() == '!' ||
                          s.back() == ';' || s.back() == ':' || s.back() == '?')) {
        s.pop_back();
    }
    return s;
}

std::string strip_wrapping(std::string s) {
    bool changed = true;
    while (changed && s.size() >= 2) {
        changed = false;
        const char a = s.front();
        const char b = s.back();
        if ((a == '(' && b == ')') || (a == '[' && b == ']') || (a == '"' && b == '"') ||
            (a == '\'' && b == '\'') || (a == '`' && b == '\'')) {
            s = s.substr(1, s.size() - 2);
            s = util::trim(s);
            changed = true;
        }
    }
    return s;
}

std::string normalize_answer_text(const std::string& s) {
    return util::to_lower(strip_terminal_punct(util::trim(s)));
}

// Index of the choice a candidate names, by letter or by exact text.
std::optional<std::size_t> resolve_choice(const std::string& candidate,
                                          const std::vector<std::string>& choices) {
    const std::string norm = normalize_answer_text(strip_wrapping(util::trim(candidate)));
    if (norm.size() == 1 && norm[0] >= 'a' &&
        norm[0] < static_cast<char>('a' + choices.size())) {
        return static_cast<std::size_t>(norm[0] - 'a');
    }
    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (normalize_answer_text(choices[i]) == norm) return i;
    }
    return std::nullopt;
}

std::optional<double> parse_number(const std::string& s) {
    const std::string t = strip_terminal_punct(util::trim(s));
    if (t.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        // tolerate thousands separators
        std::string cleaned;
        for (char c : t) {
            if (c != ',') cleaned.push_back(c);
        }
        const double v = std::stod(cleaned, &used);
        if (used != cleaned.size()) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string format_float(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

// The last numeric token in the text, if any.
std::optional<std::string> last_numeric_token(const std::string& text) {
    std::optional<std::string> best;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const bool sign = (c == '-' || c == '+') && i + 1 < text.size() &&
                          std::isdigit(static_cast<unsigned char>(text[i + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || sign) {
            std::size_t j = i + (sign ? 1 : 0);
            bool dot = false;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) ||
                    (text[j] == '.' && !dot && j + 1 < text.size() &&
                     std::isdigit(static_cast<unsigned char>(text[j + 1]))))) {
                if (text[j] == '.') dot = true;
                ++j;
            }
            best = text.substr(i, j - i);
            i = j;
        } else {
            ++i;
        }
    }
    return best;
}

std::string last_nonempty_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string last;
    while (std::getline(in, line)) {
        if (!util::trim(line).empty()) last = line;
    }
    return last;
}

// Case-insensitive search for the final "the answer is" sentinel; returns the
// rest of that line.
std::optional<std::string> sentinel_tail(const std::string& raw) {
    const std::string lower = util::to_lower(raw);
    static constexpr std::string_view needle = "the answer is";
    const auto pos = lower.rfind(needle);
    if (pos == std::string::npos) return std::nullopt;
    std::size_t start = pos + needle.size();
    std::size_t end = raw.find('\n', start);
    if (end == std::string::npos) end = raw.size();
    return raw.substr(start, end - start);
}

std::string normalize_for_type(const std::string& candidate, const QueryInstance& query) {
    const std::string cleaned = strip_wrapping(util::trim(candidate));
    switch (query.answer_type) {
        case AnswerType::multiple_choice: {
            if (query.choices) {
                if (auto idx = resolve_choice(cleaned, *query.choices)) {
                    return std::string(1, static_cast<char>('A' + *idx));
                }
            }
            return normalize_answer_text(cleaned);
        }
        case AnswerType::integer_value: {
            if (auto v = parse_number(cleaned)) {
                return std::to_string(static_cast<long long>(std::llround(*v)));
            }
            return normalize_answer_text(cleaned);
        }
        case AnswerType::float_value: {
            if (auto v = parse_number(cleaned)) {
                return format_float(*v, query.precision.value_or(2));
            }
            return normalize_answer_text(cleaned);
        }
        case AnswerType::free_form_text:
            return normalize_answer_text(cleaned);
    }
    return normalize_answer_text(cleaned);
}

}  // namespace

std::string extract_answer(const std::string& raw, const QueryInstance& query) {
    if (auto tail = sentinel_tail(raw)) {
        std::string candidate = util::trim(*tail);
        if (!candidate.empty() && candidate.front() == ':') {
            candidate = util::trim(candidate.substr(1));
        }
        candidate = strip_terminal_punct(candidate);
        if (!candidate.empty()) {
            return normalize_for_type(candidate, query);
        }
    }

    switch (query.answer_type) {
        case AnswerType::multiple_choice: {
            if (!query.choices) return "";
            const std::string line = last_nonempty_line(raw);
            if (line.empty()) return "";
            // standalone option letter token
            for (std::size_t i = 0; i < line.size(); ++i) {
                const char c = line[i];
                const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                if (upper >= 'A' && upper < static_cast<char>('A' + query.choices->size())) {
                    const bool left_ok =
                        i == 0 || !std::isalnum(static_cast<unsigned char>(line[i - 1]));
                    const bool right_ok = i + 1 == line.size() ||
                                          !std::isalnum(static_cast<unsigned char>(line[i + 1]));
                    if (left_ok && right_ok) return std::string(1, upper);
                }
            }
            // unique option text match
            const std::string lower_line = util::to_lower(line);
            std::optional<std::size_t> match;
            for (std::size_t i = 0; i < query.choices->size(); ++i) {
                const std::string choice = util::to_lower((*query.choices)[i]);
                if (!choice.empty() && lower_line.find(choice) != std::string::npos) {
                    if (match) return "";  // ambiguous
                    match = i;
                }
            }
            if (match) return std::string(1, static_cast<char>('A' + *match));
            return "";
        }
        case AnswerType::integer_value:
        case AnswerType::float_value: {
            if (auto token = last_numeric_token(raw)) {
                return normalize_for_type(*token, query);
            }
            return "";
        }
        case AnswerType::free_form_text:
            return "";
    }
    return "";
}

bool score_prediction(const std::string& extracted, const QueryInstance& query) {
    if (!query.ground_truth) {
        throw DataError("score_prediction: ground truth absent");
    }
    if (extracted.empty()) return false;
    const std::string& truth = *query.ground_truth;
    switch (query.answer_type) {
        case AnswerType::multiple_choice: {
            if (query.choices) {
                const auto a = resolve_choice(extracted, *query.choices);
                const auto b = resolve_choice(truth, *query.choices);
                if (a && b) return *a == *b;
            }
            return normalize_answer_text(extracted) == normalize_answer_text(truth);
        }
        case AnswerType::integer_value: {
            const auto a = parse_number(extracted);
            const auto b = parse_number(truth);
            if (a && b) return std::llround(*a) == std::llround(*b);
            return normalize_answer_text(extracted) == normalize_answer_text(truth);
        }
        case AnswerType::float_value: {
            const int precision = query.precision.value_or(2);
            const auto a = parse_number(extracted);
            const auto b = parse_number(truth);
            if (a && b) return format_float(*a, precision) == format_float(*b, precision);
            return normalize_answer_text(extracted) == normalize_answer_text(truth);
        }
        case AnswerType::free_form_text:
            return normalize_answer_text(extracted) == normalize_answer_text(truth);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Run orchestration

namespace {

std::string error_tag_for(const Error& e) {
    if (dynamic_cast<const SizeError*>(&e)) return "size_error";
    if (dynamic_cast<const RatingParseError*>(&e)) return "rating_parse_error";
    if (dynamic_cast<const DecodeError*>(&e)) return "decode_error";
    if (dynamic_cast<const DataError*>(&e)) return "data_error";
    if (dynamic_cast<const TransportError*>(&e)) return "transport_error";
    if (dynamic_cast<const ProviderError*>(&e)) return "provider_error";
    return "error";
}

EvalRecord evaluate_item(const RunConfig& config, const QueryInstance& query,
                         const std::vector<Demonstration>& pool, LmmGateway& gateway) {
    EvalRecord record;
    record.query_id = query.id;
    record.mode_used = config.mode;
    try {
        const auto demos = select_demonstrations(pool, query.task_type, config.num_demos,
                                                 util::fnv1a64(config.seed, query.id));

        PromptMode mode = config.mode;
        if (mode == PromptMode::I2L_HYBRID) {
            record.routing = decide_route(query, config.threshold, gateway);
            mode = record.routing->chosen_mode;
        }
        record.mode_used = mode;

        std::vector<ChatTurn> turns;
        switch (mode) {
            case PromptMode::T_ICL:
                turns = build_t_icl(demos, query);
                break;
            case PromptMode::T_ICL_IMG: {
                CaptionMap captions;
                for (const auto& demo : demos) {
                    captions[demo.id] = gateway.caption(demo.image, demo.id).caption;
                }
                captions[query.id] = gateway.caption(query.image, query.id).caption;
                turns = build_t_icl_img(demos, captions, query);
                break;
            }
            case PromptMode::VT_ICL:
            case PromptMode::VT_ICL_CUES:
                turns = build_vt_icl(demos, query, mode == PromptMode::VT_ICL_CUES,
                                     config.layout.text);
                break;
            case PromptMode::I2L: {
                const AggregateImage aggregate = build_aggregate(
                    demos, query, config.layout_order, config.resolution_ratio, config.layout,
                    config.include_cues, config.include_cot, config.permute_query);
                turns = build_i2l(aggregate);
                break;
            }
            case PromptMode::I2L_HYBRID:
                throw DataError("hybrid mode must resolve to a concrete arm");
        }

        record.prompt_digest = cache_key(turns, gateway.config());
        const LmmResponse response = gateway.complete(turns);
        record.raw_response = response.text;
        record.prompt_tokens = response.prompt_tokens;
        record.completion_tokens = response.completion_tokens;
        record.extracted_answer = extract_answer(response.text, query);
        if (query.ground_truth) {
            record.correct = score_prediction(record.extracted_answer, query);
        }
    } catch (const Error& e) {
        record.error_tag = error_tag_for(e);
        record.raw_response = e.what();
        record.correct.reset();
    }
    return record;
}

RunReport assemble_report(const RunConfig& config, const std::vector<QueryInstance>& dataset,
                          std::vector<EvalRecord> records) {
    RunReport report;
    report.config_snapshot = run_config_snapshot(config);
    report.n_items = static_cast<long>(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const QueryInstance& query = dataset[i];
        const EvalRecord& record = records[i];
        const bool scored = query.ground_truth.has_value();
        const bool is_correct = record.correct.value_or(false);
        if (scored) {
            report.overall.count += 1;
            report.overall.correct += is_correct ? 1 : 0;
            if (!query.task_type.empty()) {
                auto& stat = report.per_task_type[query.task_type];
                stat.count += 1;
                stat.correct += is_correct ? 1 : 0;
            }
            for (const auto& tag : query.reasoning_types) {
                auto& stat = report.per_reasoning_type[tag];
                stat.count += 1;
                stat.correct += is_correct ? 1 : 0;
            }
        }
        if (record.routing) {
            report.routing_decisions += 1;
            if (record.routing->chosen_mode == PromptMode::I2L) report.routing_i2l += 1;
            if (record.routing->fallback_used) report.routing_fallbacks += 1;
        }
        report.total_prompt_tokens += record.prompt_tokens;
        report.total_completion_tokens += record.completion_tokens;
    }
    report.total_cost =
        report.total_prompt_tokens / 1000.0 * config.price_per_1k_prompt_tokens +
        report.total_completion_tokens / 1000.0 * config.price_per_1k_completion_tokens;
    report.records = std::move(records);
    return report;
}

}  // namespace

RunReport run_eval(const RunConfig& config, const std::vector<QueryInstance>& dataset,
                   const std::vector<Demonstration>& pool, LmmGateway& gateway) {
    validate_run_config(config);

    std::vector<EvalRecord> records(dataset.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::max(
        1, std::min<int>(config.gateway.max_in_flight, static_cast<int>(dataset.size())));

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= dataset.size()) break;
            records[i] = evaluate_item(config, dataset[i], pool, gateway);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    return assemble_report(config, dataset, std::move(records));
}

RunReport run_eval(const RunConfig& config) {
    validate_run_config(config);
    const auto dataset = load_dataset(config.dataset_path);
    const auto pool = config.demo_pool_path.empty()
                          ? std::vector<Demonstration>{}
                          : load_demo_pool(config.demo_pool_path);
    MockScript script;
    if (config.gateway.backend == GatewayBackend::mock && !config.mock_script_path.empty()) {
        script = load_mock_script(config.mock_script_path);
    }
    LmmGateway gateway(config.gateway, std::move(script));
    RunReport report = run_eval(config, dataset, pool, gateway);
    if (!config.output_dir.empty()) {
        write_report(report, config.output_dir);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Sweeps

std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::layout_order: return "layout_order";
        case SweepAxis::resolution_ratio: return "resolution_ratio";
        case SweepAxis::num_demos: return "k";
        case SweepAxis::threshold: return "threshold";
    }
    return "?";
}

SweepAxis sweep_axis_from_string(const std::string& s) {
    const std::string u = util::to_lower(s);
    if (u == "layout_order" || u == "order") return SweepAxis::layout_order;
    if (u == "resolution_ratio" || u == "ratio") return SweepAxis::resolution_ratio;
    if (u == "k" || u == "num_demos") return SweepAxis::num_demos;
    if (u == "threshold") return SweepAxis::threshold;
    throw DataError("unknown sweep axis: " + s);
}

std::vector<RunReport> sweep(const RunConfig& base, SweepAxis axis,
                             const std::vector<std::string>& values) {
    if (values.empty()) throw DataError("sweep: no values given");
    if (axis == SweepAxis::threshold && base.mode != PromptMode::I2L_HYBRID) {
        throw DataError("sweep: threshold axis requires i2l_hybrid mode");
    }

    // validate every value (and the implied config) before any call
    std::vector<RunConfig> configs;
    for (const auto& value : values) {
        RunConfig config = base;
        config.output_dir.clear();
        switch (axis) {
            case SweepAxis::layout_order:
                config.layout_order = layout_order_from_string(value);
                break;
            case SweepAxis::resolution_ratio:
                try {
                    config.resolution_ratio = std::stod(value);
                } catch (const std::exception&) {
                    throw DataError("sweep: bad resolution ratio: " + value);
                }
                break;
            case SweepAxis::num_demos:
                try {
                    config.num_demos = std::stoi(value);
                } catch (const std::exception&) {
                    throw DataError("sweep: bad demo count: " + value);
                }
                break;
            case SweepAxis::threshold:
                try {
                    config.threshold = std::stod(value);
                } catch (const std::exception&) {
                    throw DataError("sweep: bad threshold: " + value);
                }
                break;
        }
        validate_run_config(config);
        configs.push_back(std::move(config));
    }

    const auto dataset = load_dataset(base.dataset_path);
    const auto pool = base.demo_pool_path.empty() ? std::vector<Demonstration>{}
                                                  : load_demo_pool(base.demo_pool_path);
    MockScript script;
    if (base.gateway.backend == GatewayBackend::mock && !base.mock_script_path.empty()) {
        script = load_mock_script(base.mock_script_path);
    }
    LmmGateway gateway(base.gateway, std::move(script));

    std::vector<RunReport> reports;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        reports.push_back(run_eval(configs[i], dataset, pool, gateway));
        if (!base.output_dir.empty()) {
            write_report(reports.back(),
                         base.output_dir / (to_string(axis) + "_" + values[i]));
        }
    }

    if (!base.output_dir.empty()) {
        std::string csv = to_string(axis);
        for (const auto& code : kTaskTypeCodes) csv += "," + code;
        for (const auto& code : kReasoningTypeCodes) csv += "," + code;
        csv = to_string(axis) + ",ALL" + csv.substr(to_string(axis).size()) + "\n";
        std::string rows;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            rows += values[i];
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.1f", reports[i].overall.accuracy_pct());
            rows += std::string(",") + buf;
            auto append = [&](const std::map<std::string, SubsetStat>& stats,
                              const std::string& code) {
                auto it = stats.find(code);
                if (it == stats.end() || it->second.count == 0) {
                    rows += ",";
                } else {
                    std::snprintf(buf, sizeof(buf), "%.1f", it->second.accuracy_pct());
                    rows += std::string(",") + buf;
                }
            };
            for (const auto& code : kTaskTypeCodes) append(reports[i].per_task_type, code);
            for (const auto& code : kReasoningTypeCodes) {
                append(reports[i].per_reasoning_type, code);
            }
            rows += "\n";
        }
        std::filesystem::create_directories(base.output_dir);
        util::write_text_file(base.output_dir / "sweep_summary.csv", csv + rows);
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Report files

namespace {

std::string format_pct(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", value);
    return buf;
}

}  // namespace

std::string summary_csv(const RunReport& report) {
    std::string header = "ALL";
    std::string row = format_pct(report.overall.accuracy_pct());
    auto append = [&](const std::map<std::string, SubsetStat>& stats, const std::string& code) {
        header += "," + code;
        auto it = stats.find(code);
        row += ",";
        if (it != stats.end() && it->second.count > 0) {
            row += format_pct(it->second.accuracy_pct());
        }
    };
    for (const auto& code : kTaskTypeCodes) append(report.per_task_type, code);
    for (const auto& code : kReasoningTypeCodes) append(report.per_reasoning_type, code);
    return header + "\n" + row + "\n";
}

std::string summary_markdown(const RunReport& report) {
    const std::string mode = report.config_snapshot.value("mode", "?");
    std::string head = "| Mode |";
    std::string rule = "|---|";
    std::string row = "| " + mode + " |";
    auto append = [&](const std::string& code, const std::map<std::string, SubsetStat>& stats) {
        head += " " + code + " |";
        rule += "---|";
        auto it = stats.find(code);
        if (it != stats.end() && it->second.count > 0) {
            row += " " + format_pct(it->second.accuracy_pct()) + " |";
        } else {
            row += " - |";
        }
    };
    head += " ALL |";
    rule += "---|";
    row += " " + format_pct(report.overall.accuracy_pct()) + " |";
    for (const auto& code : kTaskTypeCodes) append(code, report.per_task_type);
    for (const auto& code : kReasoningTypeCodes) append(code, report.per_reasoning_type);

    std::string out = head + "\n" + rule + "\n" + row + "\n\n";
    out += "Items: " + std::to_string(report.n_items) + "\n\n";
    out += "Tokens: " + std::to_string(report.total_prompt_tokens) + " prompt, " +
           std::to_string(report.total_completion_tokens) + " completion\n";
    if (report.routing_decisions > 0) {
        out += "\nRouting: " + std::to_string(report.routing_i2l) + "/" +
               std::to_string(report.routing_decisions) + " to i2l (" +
               format_pct(100.0 * report.i2l_fraction()) + "%), " +
               std::to_string(report.routing_fallbacks) + " fallbacks\n";
    }
    return out;
}

std::vector<std::filesystem::path> write_report(const RunReport& report,
                                                const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (!std::filesystem::is_directory(output_dir)) {
        throw DataError("cannot create output dir: " + output_dir.generic_string());
    }
    std::vector<std::filesystem::path> written;

    const auto report_path = output_dir / "report.json";
    util::write_text_file(report_path, report_to_json(report).dump(2) + "\n");
    written.push_back(report_path);

    const auto csv_path = output_dir / "summary.csv";
    util::write_text_file(csv_path, summary_csv(report));
    written.push_back(csv_path);

    const auto md_path = output_dir / "summary.md";
    util::write_text_file(md_path, summary_markdown(report));
    written.push_back(md_path);

    if (report.routing_decisions > 0) {
        std::string lines;
        for (const auto& record : report.records) {
            if (record.routing) {
                lines += json(*record.routing).dump() + "\n";
            }
        }
        const auto routing_path = output_dir / "routing.jsonl";
        util::write_text_file(routing_path, lines);
        written.push_back(routing_path);
    }
    return written;
}

}  // namespace inimage
