// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inimage/domain.hpp"
#include "inimage/gateway.hpp"
#include "inimage/layout.hpp"
#include "inimage/selector.hpp"

namespace inimage {

// Table column order for subset breakdowns: five task types, seven
// mathematical reasoning types.
extern const std::vector<std::string> kTaskTypeCodes;
extern const std::vector<std::string> kReasoningTypeCodes;

// Maps long subset names ("figure question answering") to their codes; known
// codes pass through, unknown strings are preserved as-is.
std::string normalize_subset_tag(const std::string& tag);

struct RunConfig {
    PromptMode mode = PromptMode::I2L;
    int num_demos = 1;
    LayoutOrder layout_order = LayoutOrder::T2B;
    double resolution_ratio = 1.0;
    double threshold = 1.5;
    std::uint64_t seed = 0;
    std::filesystem::path dataset_path;
    std::filesystem::path demo_pool_path;
    GatewayConfig gateway;
    std::filesystem::path output_dir;

    LayoutStyle layout;
    bool include_cues = true;
    bool include_cot = true;
    bool permute_query = false;
    std::filesystem::path mock_script_path;
    double price_per_1k_prompt_tokens = 0.0;
    double price_per_1k_completion_tokens = 0.0;
};

void validate_run_config(const RunConfig& config);
json run_config_snapshot(const RunConfig& config);

struct EvalRecord {
    std::string query_id;
    PromptMode mode_used = PromptMode::I2L;
    std::string prompt_digest;
    std::string raw_response;
    std::string extracted_answer;
    std::optional<bool> correct;  // defined iff ground truth present and no error
    std::optional<RoutingDecision> routing;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    std::optional<std::string> error_tag;
};

void to_json(json& j, const EvalRecord& v);
void from_json(const json& j, EvalRecord& v);

struct SubsetStat {
    long correct = 0;
    long count = 0;
    double accuracy_pct() const { return count == 0 ? 0.0 : 100.0 * correct / count; }
    bool operator==(const SubsetStat&) const = default;
};

struct RunReport {
    json config_snapshot;
    long n_items = 0;
    SubsetStat overall;
    std::map<std::string, SubsetStat> per_task_type;
    std::map<std::string, SubsetStat> per_reasoning_type;
    long routing_decisions = 0;
    long routing_i2l = 0;
    long routing_fallbacks = 0;
    long total_prompt_tokens = 0;
    long total_completion_tokens = 0;
    double total_cost = 0.0;
    std::vector<EvalRecord> records;

    double i2l_fraction() const {
        return routing_decisions == 0
                   ? 0.0
                   : static_cast<double>(routing_i2l) / static_cast<double>(routing_decisions);
    }
};

json report_to_json(const RunReport& report);
RunReport report_from_json(const json& j);

// Dataset manifests: .jsonl holds one QueryInstance per line with image paths
// relative to the manifest; .json is read through the MathVista field
// adapter. Load failures list every offending record.
std::vector<QueryInstance> load_dataset(const std::filesystem::path& path);

// One JSON document of Demonstration records; ids must be unique.
std::vector<Demonstration> load_demo_pool(const std::filesystem::path& path);

// Deterministic seeded draw without replacement, task-tag filtered first and
// falling back to the whole pool when the tag is too small.
std::vector<Demonstration> select_demonstrations(const std::vector<Demonstration>& pool,
                                                 const std::string& task_tag, int k,
                                                 std::uint64_t seed);

// Sentinel-first extraction ("The answer is X"), then per-type fallbacks;
// failure yields an empty answer.
std::string extract_answer(const std::string& raw, const QueryInstance& query);

// Normalized comparison against ground truth (letter or text for multiple
// choice, rounded numerics, case-folded free text).
bool score_prediction(const std::string& extracted, const QueryInstance& query);

// Builds prompts, drives the gateway, extracts, scores and aggregates.
// Per-item failures are recorded under error_tag and the run continues.
RunReport run_eval(const RunConfig& config);
RunReport run_eval(const RunConfig& config, const std::vector<QueryInstance>& dataset,
                   const std::vector<Demonstration>& pool, LmmGateway& gateway);

enum class SweepAxis { layout_order, resolution_ratio, num_demos, threshold };

std::string to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(const std::string& s);

// One run per value over a shared gateway cache. Values are validated before
// any call; per-value reports land under output_dir with a consolidated
// comparison table.
std::vector<RunReport> sweep(const RunConfig& base, SweepAxis axis,
                             const std::vector<std::string>& values);

// Emits report.json, summary.csv, summary.md (and routing.jsonl when routing
// decisions are present); returns the written paths.
std::vector<std::filesystem::path> write_report(const RunReport& report,
                                                const std::filesystem::path& output_dir);

std::string summary_csv(const RunReport& report);
std::string summary_markdown(const RunReport& report);

}  // namespace inimage
