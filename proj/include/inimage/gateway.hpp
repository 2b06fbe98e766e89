// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "inimage/domain.hpp"
#include "inimage/prompt.hpp"

namespace inimage {

enum class GatewayBackend { remote, mock };

std::string to_string(GatewayBackend b);
GatewayBackend gateway_backend_from_string(const std::string& s);

struct GatewayConfig {
    std::string endpoint_url = "https://api.openai.com/v1/chat/completions";
    std::string model_id = "gpt4-vision-preview";
    double temperature = 0.0;
    int max_output_tokens = 1024;
    double request_timeout_s = 120.0;
    int max_retries = 3;
    int max_in_flight = 4;
    std::filesystem::path cache_dir;  // empty disables the on-disk cache
    GatewayBackend backend = GatewayBackend::mock;
    std::size_t max_payload_bytes = 20u * 1024 * 1024;
};

void validate_config(const GatewayConfig& config);

struct LmmResponse {
    std::string text;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    long latency_ms = 0;
    bool from_cache = false;
};

// Scripted responses for the mock backend. The first rule whose digest or
// substring matches wins; unmatched requests get default_response.
struct MockRule {
    std::optional<std::string> match_digest;
    std::optional<std::string> match_substring;
    std::string response;
};

struct MockScript {
    std::vector<MockRule> rules;
    std::string default_response = "The answer is X.";
};

MockScript mock_script_from_json(const json& j);
MockScript load_mock_script(const std::filesystem::path& path);

// HTTP layer behind the remote backend; swapped out in tests for fault
// injection.
class Transport {
public:
    struct Result {
        int status = 0;
        std::string body;
    };
    virtual ~Transport() = default;
    // Throws TransportError on network-level failure.
    virtual Result post(const GatewayConfig& config, const std::string& body) = 0;
};

// OpenAI-compatible vision chat-completion client (base64 data URLs); reads
// the API key from LMM_API_KEY.
std::unique_ptr<Transport> make_http_transport();

// Serialized request body in the provider wire shape (docs/wire.md).
std::string build_wire_request(const std::vector<ChatTurn>& turns, const GatewayConfig& config);

// 64-hex SHA-256 over the canonical serialization of (turns, model_id,
// temperature, max_output_tokens).
std::string cache_key(const std::vector<ChatTurn>& turns, const GatewayConfig& config);

struct GatewayStats {
    long requests = 0;        // complete() invocations
    long cache_hits = 0;
    long backend_calls = 0;   // cache misses that reached a backend
    long network_attempts = 0;
    long retries = 0;
    int in_flight_high_water = 0;
};

// Single choke point for model calls: cache lookup, mock or remote dispatch,
// retry with backoff, accounting. Safe to call from many worker threads.
class LmmGateway {
public:
    explicit LmmGateway(GatewayConfig config, MockScript script = {},
                        std::unique_ptr<Transport> transport = nullptr);

    LmmResponse complete(const std::vector<ChatTurn>& turns);

    // f_i2t: the fixed describe prompt plus the image, through complete() so
    // captions share the response cache.
    CaptionRecord caption(const ImagePart& image, const std::string& image_id);
    CaptionRecord caption(const ImageRef& image, const std::string& image_id);

    const GatewayConfig& config() const { return config_; }
    GatewayStats stats() const;
    void reset_stats();

    // Test hook: replaces the inter-retry sleep.
    void set_sleep_hook(std::function<void(std::chrono::milliseconds)> hook);

    static constexpr const char* kDescribePrompt = "Describe the given image.";

private:
    struct CacheRecord {
        std::string text;
        long prompt_tokens = 0;
        long completion_tokens = 0;
    };

    std::optional<CacheRecord> cache_lookup(const std::string& digest);
    void cache_store(const std::string& digest, const CacheRecord& record);
    CacheRecord call_mock(const std::vector<ChatTurn>& turns, const std::string& digest);
    CacheRecord call_remote(const std::string& body);

    GatewayConfig config_;
    MockScript script_;
    std::unique_ptr<Transport> transport_;
    std::function<void(std::chrono::milliseconds)> sleep_;

    mutable std::mutex mu_;
    std::map<std::string, CacheRecord> memory_cache_;
    std::set<std::string> inflight_keys_;  // single-flight: one fetch per digest
    std::condition_variable inflight_done_;
    GatewayStats stats_;
    int in_flight_ = 0;
    std::condition_variable slot_free_;
};

}  // namespace inimage
