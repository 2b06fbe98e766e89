// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "inimage/errors.hpp"
#include "inimage/harness.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/raster/kernels.hpp"
#include "inimage/util.hpp"

namespace {

using namespace inimage;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTransport = 3;

struct GlobalOpts {
    std::string format = "text";
    bool serial = false;

    bool json() const { return format == "json"; }
};

struct RunOpts {
    RunConfig config;
    std::string mode = "i2l";
    std::string order = "T2B";
    std::string backend = "mock";
    std::string dataset;
    std::string pool;
    std::string script;
    std::string cache_dir;
    std::string output;
    bool no_cues = false;
    bool no_cot = false;
};

void add_gateway_options(CLI::App* cmd, RunOpts& opts) {
    cmd->add_option("--backend", opts.backend, "Gateway backend: mock or remote")
        ->check(CLI::IsMember({"mock", "remote"}));
    cmd->add_option("--script", opts.script, "Mock script JSON (mock backend)");
    cmd->add_option("--cache-dir", opts.cache_dir, "Response cache directory");
    cmd->add_option("--endpoint", opts.config.gateway.endpoint_url, "Chat completion endpoint URL");
    cmd->add_option("--model", opts.config.gateway.model_id, "Model identifier");
    cmd->add_option("--temperature", opts.config.gateway.temperature, "Sampling temperature");
    cmd->add_option("--max-tokens", opts.config.gateway.max_output_tokens, "Max output tokens");
    cmd->add_option("--max-in-flight", opts.config.gateway.max_in_flight,
                    "Concurrent request cap");
    cmd->add_option("--max-retries", opts.config.gateway.max_retries, "Retry budget");
    cmd->add_option("--timeout", opts.config.gateway.request_timeout_s, "Request timeout (s)");
}

void add_layout_options(CLI::App* cmd, RunOpts& opts) {
    cmd->add_option("--order", opts.order, "Layout order: T2B, B2T, L2R, R2L");
    cmd->add_option("--ratio", opts.config.resolution_ratio, "Resolution ratio");
    cmd->add_option("--card-width", opts.config.layout.card_width, "Card width in pixels");
    cmd->add_option("--padding", opts.config.layout.padding, "Padding in pixels");
    cmd->add_option("--separator-width", opts.config.layout.separator_width, "Separator width");
    cmd->add_option("--max-long-side", opts.config.layout.max_long_side, "Canvas long-side cap");
    cmd->add_option("--font-size", opts.config.layout.text.font_size, "Card text font size");
    cmd->add_option("--banner", opts.config.layout.banner_text, "Banner text");
    cmd->add_flag("--no-cues", opts.no_cues, "Render demonstrations without visual cues");
    cmd->add_flag("--no-cot", opts.no_cot, "Render demonstrations without reasoning text");
    cmd->add_flag("--permute-query", opts.config.permute_query,
                  "Let the query card ride the layout order");
}

void add_run_options(CLI::App* cmd, RunOpts& opts) {
    cmd->add_option("--mode", opts.mode,
                    "Prompt mode: t_icl, t_icl_img, vt_icl, vt_icl_cues, i2l, i2l_hybrid");
    cmd->add_option("--k", opts.config.num_demos, "Demonstrations per query");
    cmd->add_option("--threshold", opts.config.threshold, "Hybrid routing threshold");
    cmd->add_option("--seed", opts.config.seed, "Demonstration selection seed");
    cmd->add_option("--dataset", opts.dataset, "Dataset manifest path")->required();
    cmd->add_option("--pool", opts.pool, "Demonstration pool path");
    cmd->add_option("--out", opts.output, "Output directory")->required();
    cmd->add_option("--price-prompt", opts.config.price_per_1k_prompt_tokens,
                    "Cost per 1k prompt tokens");
    cmd->add_option("--price-completion", opts.config.price_per_1k_completion_tokens,
                    "Cost per 1k completion tokens");
    add_layout_options(cmd, opts);
    add_gateway_options(cmd, opts);
}

RunConfig finalize(RunOpts& opts) {
    opts.config.mode = prompt_mode_from_string(opts.mode);
    opts.config.layout_order = layout_order_from_string(opts.order);
    opts.config.gateway.backend = gateway_backend_from_string(opts.backend);
    opts.config.dataset_path = opts.dataset;
    opts.config.demo_pool_path = opts.pool;
    opts.config.mock_script_path = opts.script;
    opts.config.gateway.cache_dir = opts.cache_dir;
    opts.config.output_dir = opts.output;
    opts.config.include_cues = !opts.no_cues;
    opts.config.include_cot = !opts.no_cot;
    return opts.config;
}

LmmGateway make_gateway(const RunConfig& config) {
    MockScript script;
    if (config.gateway.backend == GatewayBackend::mock && !config.mock_script_path.empty()) {
        script = load_mock_script(config.mock_script_path);
    }
    return LmmGateway(config.gateway, std::move(script));
}

int cmd_compose(const GlobalOpts& global, RunOpts& opts, const std::vector<std::string>& demo_ids,
                const std::string& query_id, const std::string& out_png) {
    const RunConfig config = finalize(opts);
    const auto pool = load_demo_pool(config.demo_pool_path);
    const auto dataset = load_dataset(config.dataset_path);

    std::vector<Demonstration> demos;
    for (const auto& id : demo_ids) {
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const Demonstration& d) { return d.id == id; });
        if (it == pool.end()) throw DataError("demo id not in pool: " + id);
        demos.push_back(*it);
    }
    auto qit = std::find_if(dataset.begin(), dataset.end(),
                            [&](const QueryInstance& q) { return q.id == query_id; });
    if (qit == dataset.end()) throw DataError("query id not in dataset: " + query_id);

    std::vector<std::string> warnings;
    const AggregateImage agg = build_aggregate(
        demos, *qit, config.layout_order, config.resolution_ratio, config.layout,
        config.include_cues, config.include_cot, config.permute_query, &warnings);

    raster::write_png_file(out_png, agg.pixels);
    const std::string sidecar = out_png + ".regions.json";
    util::write_text_file(sidecar, region_map_to_json(agg.region_map).dump(2) + "\n");

    if (global.json()) {
        json out{{"output", out_png},
                 {"regions", sidecar},
                 {"width", agg.pixels.width()},
                 {"height", agg.pixels.height()},
                 {"warnings", warnings}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "wrote " << out_png << " (" << agg.pixels.width() << "x"
                  << agg.pixels.height() << ") and " << sidecar << "\n";
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    }
    return kExitOk;
}

int cmd_validate(const GlobalOpts& global, const std::string& pool_path,
                 const std::string& dataset_path) {
    std::vector<std::string> problems;
    long demos = 0;
    long queries = 0;
    auto collect = [&](auto&& loader) {
        try {
            loader();
        } catch (const DataError& e) {
            problems.push_back(e.what());
        }
    };
    if (!pool_path.empty()) {
        collect([&] { demos = static_cast<long>(load_demo_pool(pool_path).size()); });
    }
    if (!dataset_path.empty()) {
        collect([&] { queries = static_cast<long>(load_dataset(dataset_path).size()); });
    }
    if (global.json()) {
        std::cout << json{{"ok", problems.empty()},
                          {"demonstrations", demos},
                          {"queries", queries},
                          {"problems", problems}}
                         .dump(2)
                  << "\n";
    } else if (problems.empty()) {
        std::cout << "ok: " << demos << " demonstrations, " << queries << " queries\n";
    } else {
        for (const auto& p : problems) std::cerr << p << "\n";
    }
    return problems.empty() ? kExitOk : kExitData;
}

int cmd_rate(const GlobalOpts& global, RunOpts& opts, const std::string& image_path,
             std::string description) {
    opts.dataset = "-";
    opts.output = "-";
    RunConfig config = opts.config;
    config.mock_script_path = opts.script;
    config.gateway.backend = gateway_backend_from_string(opts.backend);
    config.gateway.cache_dir = opts.cache_dir;

    LmmGateway gateway = make_gateway(config);
    const auto bytes = util::read_file(image_path);
    ImagePart image{raster::sniff_format(bytes) == raster::ImageFormat::png ? ImageEncoding::png
                                                                            : ImageEncoding::jpeg,
                    bytes};
    if (description.empty()) {
        description = gateway.caption(image, image_path).caption;
    }
    const int score = rate(image, description, gateway);
    if (global.json()) {
        std::cout << json{{"score", score}, {"description", description}}.dump(2) << "\n";
    } else {
        std::cout << score << "\n";
    }
    return kExitOk;
}

int cmd_route(const GlobalOpts& global, int score, double threshold) {
    const PromptMode mode = route(score, threshold);
    std::string name = to_string(mode);
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (global.json()) {
        std::cout << json{{"mode", name}, {"score", score}, {"threshold", threshold}}.dump(2)
                  << "\n";
    } else {
        std::cout << name << "\n";
    }
    return kExitOk;
}

void print_run_summary(const GlobalOpts& global, const RunReport& report,
                       const std::vector<std::filesystem::path>& files) {
    if (global.json()) {
        json j = report_to_json(report);
        j.erase("records");
        json paths = json::array();
        for (const auto& f : files) paths.push_back(f.generic_string());
        j["files"] = paths;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("accuracy %.1f%% (%ld/%ld over %ld items)\n", report.overall.accuracy_pct(),
                    report.overall.correct, report.overall.count, report.n_items);
        for (const auto& f : files) std::cout << "wrote " << f.generic_string() << "\n";
    }
}

int cmd_run(const GlobalOpts& global, RunOpts& opts) {
    const RunConfig config = finalize(opts);
    RunReport report = run_eval(config);
    const auto files = write_report(report, config.output_dir);
    print_run_summary(global, report, files);
    return kExitOk;
}

int cmd_sweep(const GlobalOpts& global, RunOpts& opts, const std::string& axis,
              const std::vector<std::string>& values) {
    const RunConfig config = finalize(opts);
    const auto reports = sweep(config, sweep_axis_from_string(axis), values);
    if (global.json()) {
        json arr = json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
            arr.push_back(json{{"value", values[i]},
                               {"accuracy_pct", reports[i].overall.accuracy_pct()},
                               {"n_items", reports[i].n_items}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::printf("%s=%s: %.1f%%\n", axis.c_str(), values[i].c_str(),
                        reports[i].overall.accuracy_pct());
        }
    }
    return kExitOk;
}

int cmd_report(const GlobalOpts& global, const std::string& input, const std::string& out_dir) {
    RunReport report;
    try {
        report = report_from_json(json::parse(util::read_text_file(input)));
    } catch (const json::exception& e) {
        throw DataError(std::string("cannot parse report: ") + e.what());
    }
    const auto files = write_report(report, out_dir);
    print_run_summary(global, report, files);
    return kExitOk;
}

int cmd_cache(const GlobalOpts& global, const std::string& dir, bool clear) {
    const std::filesystem::path cache_dir(dir);
    if (!std::filesystem::exists(cache_dir)) {
        throw DataError("cache dir not found: " + dir);
    }
    std::vector<std::string> digests;
    for (const auto& entry : std::filesystem::directory_iterator(cache_dir)) {
        if (entry.path().extension() == ".json") {
            digests.push_back(entry.path().stem().string());
        }
    }
    std::sort(digests.begin(), digests.end());
    if (clear) {
        for (const auto& d : digests) {
            std::filesystem::remove(cache_dir / (d + ".json"));
        }
        if (global.json()) {
            std::cout << json{{"cleared", digests.size()}}.dump(2) << "\n";
        } else {
            std::cout << "cleared " << digests.size() << " cached responses\n";
        }
    } else if (global.json()) {
        std::cout << json{{"entries", digests}}.dump(2) << "\n";
    } else {
        for (const auto& d : digests) std::cout << d << "\n";
        std::cout << digests.size() << " cached responses\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aggregated-image prompt composition, hybrid routing and LMM evaluation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file (flags override it)");
    app.set_version_flag("--version", "inimage 0.1.0");

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--serial", global.serial, "Force the serial raster kernel path");

    // compose
    RunOpts compose_opts;
    std::vector<std::string> compose_demos;
    std::string compose_query;
    std::string compose_out = "aggregate.png";
    auto* compose = app.add_subcommand("compose", "Render an aggregated image");
    compose->add_option("--pool", compose_opts.pool, "Demonstration pool path")->required();
    compose->add_option("--dataset", compose_opts.dataset, "Dataset manifest path")->required();
    compose->add_option("--demo", compose_demos, "Demonstration id (repeatable)")->required();
    compose->add_option("--query", compose_query, "Query id")->required();
    compose->add_option("-o,--output", compose_out, "Output PNG path")->capture_default_str();
    add_layout_options(compose, compose_opts);

    // validate
    std::string validate_pool;
    std::string validate_dataset;
    auto* validate = app.add_subcommand("validate", "Structural checks on pools and manifests");
    validate->add_option("--pool", validate_pool, "Demonstration pool path");
    validate->add_option("--dataset", validate_dataset, "Dataset manifest path");

    // rate
    RunOpts rate_opts;
    std::string rate_image;
    std::string rate_description;
    auto* rate_cmd = app.add_subcommand("rate", "Describe and rate one image");
    rate_cmd->add_option("--image", rate_image, "Image path")->required();
    rate_cmd->add_option("--description", rate_description,
                         "Description to rate (described by the model when omitted)");
    add_gateway_options(rate_cmd, rate_opts);

    // route
    int route_score = 1;
    double route_threshold = 1.5;
    auto* route_cmd = app.add_subcommand("route", "Threshold-route a describability score");
    route_cmd->add_option("--score", route_score, "Score in {1,2,3,4}")->required();
    route_cmd->add_option("--threshold", route_threshold, "Routing threshold")
        ->capture_default_str();

    // run
    RunOpts run_opts;
    auto* run = app.add_subcommand("run", "Evaluate a dataset under one mode");
    add_run_options(run, run_opts);

    // sweep
    RunOpts sweep_opts;
    std::string sweep_axis;
    std::vector<std::string> sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run an ablation axis");
    sweep_cmd->add_option("--axis", sweep_axis, "layout_order, resolution_ratio, k or threshold")
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "Values for the axis")
        ->required()
        ->delimiter(',');
    add_run_options(sweep_cmd, sweep_opts);

    // report
    std::string report_input;
    std::string report_out;
    auto* report_cmd = app.add_subcommand("report", "Re-render summaries from report.json");
    report_cmd->add_option("--input", report_input, "report.json path")->required();
    report_cmd->add_option("--out", report_out, "Output directory")->required();

    // cache
    std::string cache_dir_opt;
    bool cache_clear = false;
    auto* cache_cmd = app.add_subcommand("cache", "List or clear the response cache");
    cache_cmd->add_option("--dir", cache_dir_opt, "Cache directory")->required();
    cache_cmd->add_flag("--clear", cache_clear, "Remove all cached responses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (global.serial) {
        raster::kernels::set_parallel(false);
    }

    try {
        if (*compose) return cmd_compose(global, compose_opts, compose_demos, compose_query,
                                         compose_out);
        if (*validate) return cmd_validate(global, validate_pool, validate_dataset);
        if (*rate_cmd) return cmd_rate(global, rate_opts, rate_image, rate_description);
        if (*route_cmd) return cmd_route(global, route_score, route_threshold);
        if (*run) return cmd_run(global, run_opts);
        if (*sweep_cmd) return cmd_sweep(global, sweep_opts, sweep_axis, sweep_values);
        if (*report_cmd) return cmd_report(global, report_input, report_out);
        if (*cache_cmd) return cmd_cache(global, cache_dir_opt, cache_clear);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TransportError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTransport;
    } catch (const ProviderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTransport;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
