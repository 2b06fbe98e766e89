// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/gateway.hpp"

#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "inimage/errors.hpp"
#include "inimage/util.hpp"

namespace inimage {

namespace {

std::string joined_text(const std::vector<ChatTurn>& turns) {
    std::string out;
    for (const auto& turn : turns) {
        for (const auto& part : turn.parts) {
            if (const auto* text = std::get_if<TextPart>(&part)) {
                if (!out.empty()) out.push_back('\n');
                out += text->text;
            }
        }
    }
    return out;
}

long approx_tokens(std::size_t chars) { return static_cast<long>((chars + 3) / 4); }

// Fixed per-image token charge used by the mock's deterministic accounting.
constexpr long kMockImageTokens = 85;

struct SlotGuard {
    std::mutex& mu;
    std::condition_variable& cv;
    int& counter;

    ~SlotGuard() {
        {
            std::lock_guard<std::mutex> lock(mu);
            --counter;
        }
        cv.notify_one();
    }
};

}  // namespace

std::string to_string(GatewayBackend b) {
    return b == GatewayBackend::remote ? "remote" : "mock";
}

GatewayBackend gateway_backend_from_string(const std::string& s) {
    if (s == "remote") return GatewayBackend::remote;
    if (s == "mock") return GatewayBackend::mock;
    throw DataError("unknown gateway backend: " + s);
}

void validate_config(const GatewayConfig& config) {
    if (config.temperature < 0.0) throw DataError("gateway: temperature must be >= 0");
    if (config.max_in_flight < 1) throw DataError("gateway: max_in_flight must be >= 1");
    if (config.max_retries < 1) throw DataError("gateway: max_retries must be >= 1");
}

MockScript mock_script_from_json(const json& j) {
    MockScript script;
    if (j.contains("rules")) {
        for (const auto& r : j.at("rules")) {
            MockRule rule;
            if (r.contains("match_digest")) rule.match_digest = r.at("match_digest").get<std::string>();
            if (r.contains("match_substring")) {
                rule.match_substring = r.at("match_substring").get<std::string>();
            }
            rule.response = r.at("response").get<std::string>();
            script.rules.push_back(std::move(rule));
        }
    }
    if (j.contains("default_response")) {
        script.default_response = j.at("default_response").get<std::string>();
    }
    return script;
}

MockScript load_mock_script(const std::filesystem::path& path) {
    return mock_script_from_json(json::parse(util::read_text_file(path)));
}

std::string build_wire_request(const std::vector<ChatTurn>& turns, const GatewayConfig& config) {
    ordered_json messages = ordered_json::array();
    for (const auto& turn : turns) {
        ordered_json content = ordered_json::array();
        for (const auto& part : turn.parts) {
            if (const auto* text = std::get_if<TextPart>(&part)) {
                content.push_back(ordered_json{{"type", "text"}, {"text", text->text}});
            } else {
                const auto& img = std::get<ImagePart>(part);
                const std::string url = "data:image/" + to_string(img.format) + ";base64," +
                                        util::base64_encode(img.bytes);
                content.push_back(ordered_json{{"type", "image_url"},
                                               {"image_url", ordered_json{{"url", url}}}});
            }
        }
        messages.push_back(ordered_json{{"role", to_string(turn.role)}, {"content", content}});
    }
    ordered_json body{{"model", config.model_id},
                      {"temperature", config.temperature},
                      {"max_tokens", config.max_output_tokens},
                      {"messages", messages}};
    return body.dump();
}

std::string cache_key(const std::vector<ChatTurn>& turns, const GatewayConfig& config) {
    ordered_json j{{"model", config.model_id},
                   {"temperature", config.temperature},
                   {"max_output_tokens", config.max_output_tokens},
                   {"prompt", canonical_json(turns)}};
    return util::sha256_hex(j.dump());
}

// ---------------------------------------------------------------------------
// HTTP transport

namespace {

class HttpTransport : public Transport {
public:
    Result post(const GatewayConfig& config, const std::string& body) override {
        const auto [base, path] = split_url(config.endpoint_url);
        httplib::Client client(base);
        client.set_connection_timeout(std::chrono::duration<double>(config.request_timeout_s));
        client.set_read_timeout(std::chrono::duration<double>(config.request_timeout_s));

        httplib::Headers headers;
        if (const char* key = std::getenv("LMM_API_KEY"); key && *key) {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }
        auto res = client.Post(path, headers, body, "application/json");
        if (!res) {
            throw TransportError("HTTP request failed: " + httplib::to_string(res.error()));
        }
        return Result{res->status, res->body};
    }

private:
    static std::pair<std::string, std::string> split_url(const std::string& url) {
        const auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos) {
            throw DataError("endpoint_url must include a scheme: " + url);
        }
        const auto path_start = url.find('/', scheme_end + 3);
        if (path_start == std::string::npos) {
            return {url, "/"};
        }
        return {url.substr(0, path_start), url.substr(path_start)};
    }
};

}  // namespace

std::unique_ptr<Transport> make_http_transport() { return std::make_unique<HttpTransport>(); }

// ---------------------------------------------------------------------------
// Gateway

LmmGateway::LmmGateway(GatewayConfig config, MockScript script,
                       std::unique_ptr<Transport> transport)
    : config_(std::move(config)), script_(std::move(script)), transport_(std::move(transport)) {
    validate_config(config_);
    if (!transport_ && config_.backend == GatewayBackend::remote) {
        transport_ = make_http_transport();
    }
    sleep_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    if (!config_.cache_dir.empty()) {
        std::filesystem::create_directories(config_.cache_dir);
    }
}

void LmmGateway::set_sleep_hook(std::function<void(std::chrono::milliseconds)> hook) {
    sleep_ = std::move(hook);
}

GatewayStats LmmGateway::stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
}

void LmmGateway::reset_stats() {
    std::lock_guard<std::mutex> lock(mu_);
    stats_ = GatewayStats{};
}

std::optional<LmmGateway::CacheRecord> LmmGateway::cache_lookup(const std::string& digest) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memory_cache_.find(digest);
        if (it != memory_cache_.end()) return it->second;
    }
    if (config_.cache_dir.empty()) return std::nullopt;
    const auto path = config_.cache_dir / (digest + ".json");
    if (!std::filesystem::exists(path)) return std::nullopt;
    const json j = json::parse(util::read_text_file(path));
    CacheRecord rec{j.at("text").get<std::string>(), j.at("prompt_tokens").get<long>(),
                    j.at("completion_tokens").get<long>()};
    std::lock_guard<std::mutex> lock(mu_);
    memory_cache_[digest] = rec;
    return rec;
}

void LmmGateway::cache_store(const std::string& digest, const CacheRecord& record) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        memory_cache_[digest] = record;
    }
    if (config_.cache_dir.empty()) return;
    const json j{{"digest", digest},
                 {"text", record.text},
                 {"prompt_tokens", record.prompt_tokens},
                 {"completion_tokens", record.completion_tokens}};
    util::write_file_atomic(config_.cache_dir / (digest + ".json"), j.dump(2) + "\n");
}

LmmGateway::CacheRecord LmmGateway::call_mock(const std::vector<ChatTurn>& turns,
                                              const std::string& digest) {
    const std::string text = joined_text(turns);
    const std::string* response = &script_.default_response;
    for (const auto& rule : script_.rules) {
        if (rule.match_digest && *rule.match_digest == digest) {
            response = &rule.response;
            break;
        }
        if (rule.match_substring && text.find(*rule.match_substring) != std::string::npos) {
            response = &rule.response;
            break;
        }
    }
    CacheRecord rec;
    rec.text = *response;
    rec.prompt_tokens =
        approx_tokens(text.size()) + kMockImageTokens * count_image_parts(turns);
    rec.completion_tokens = approx_tokens(rec.text.size());
    return rec;
}

LmmGateway::CacheRecord LmmGateway::call_remote(const std::string& body) {
    {
        std::unique_lock<std::mutex> lock(mu_);
        slot_free_.wait(lock, [&] { return in_flight_ < config_.max_in_flight; });
        ++in_flight_;
        stats_.in_flight_high_water = std::max(stats_.in_flight_high_water, in_flight_);
    }
    SlotGuard guard{mu_, slot_free_, in_flight_};

    const int attempts = std::max(1, config_.max_retries);
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            ++stats_.network_attempts;
        }
        Transport::Result result;
        try {
            result = transport_->post(config_, body);
        } catch (const TransportError& e) {
            if (attempt == attempts) {
                throw TransportError(std::string(e.what()) + " (after " +
                                     std::to_string(attempt) + " attempts)");
            }
            {
                std::lock_guard<std::mutex> lock(mu_);
                ++stats_.retries;
            }
            sleep_(std::chrono::seconds(1LL << (attempt - 1)));
            continue;
        }
        const bool retryable = result.status == 429 || result.status >= 500;
        if (result.status != 200) {
            if (retryable && attempt < attempts) {
                {
                    std::lock_guard<std::mutex> lock(mu_);
                    ++stats_.retries;
                }
                sleep_(std::chrono::seconds(1LL << (attempt - 1)));
                continue;
            }
            throw ProviderError(result.status,
                                "provider error (status " + std::to_string(result.status) +
                                    "): " + result.body.substr(0, 512));
        }
        json j;
        try {
            j = json::parse(result.body);
        } catch (const json::exception&) {
            throw ProviderError(result.status, "provider returned unparseable JSON");
        }
        if (j.contains("error")) {
            throw ProviderError(result.status, j["error"].value("message", "provider error"));
        }
        CacheRecord rec;
        try {
            rec.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception&) {
            throw ProviderError(result.status, "provider response missing choices[0].message");
        }
        if (j.contains("usage")) {
            rec.prompt_tokens = j["usage"].value("prompt_tokens", 0L);
            rec.completion_tokens = j["usage"].value("completion_tokens", 0L);
        }
        return rec;
    }
    throw TransportError("unreachable retry exit");
}

LmmResponse LmmGateway::complete(const std::vector<ChatTurn>& turns) {
    if (turns.empty()) throw DataError("complete: turns must be non-empty");
    for (const auto& turn : turns) {
        if (turn.parts.empty()) throw DataError("complete: chat turn with no parts");
    }

    const std::string digest = cache_key(turns, config_);
    {
        std::lock_guard<std::mutex> lock(mu_);
        ++stats_.requests;
    }

    if (auto hit = cache_lookup(digest)) {
        std::lock_guard<std::mutex> lock(mu_);
        ++stats_.cache_hits;
        return LmmResponse{hit->text, hit->prompt_tokens, hit->completion_tokens, 0, true};
    }

    const std::string body = build_wire_request(turns, config_);
    if (body.size() > config_.max_payload_bytes) {
        throw SizeError("request payload of " + std::to_string(body.size()) +
                        " bytes exceeds max_payload_bytes (no call made)");
    }

    // Single-flight: concurrent identical requests ride one backend call.
    {
        std::unique_lock<std::mutex> lock(mu_);
        while (inflight_keys_.count(digest) != 0) {
            inflight_done_.wait(lock);
            auto it = memory_cache_.find(digest);
            if (it != memory_cache_.end()) {
                ++stats_.cache_hits;
                return LmmResponse{it->second.text, it->second.prompt_tokens,
                                   it->second.completion_tokens, 0, true};
            }
        }
        inflight_keys_.insert(digest);
        ++stats_.backend_calls;
    }
    struct FlightGuard {
        LmmGateway& gw;
        const std::string& digest;
        ~FlightGuard() {
            {
                std::lock_guard<std::mutex> lock(gw.mu_);
                gw.inflight_keys_.erase(digest);
            }
            gw.inflight_done_.notify_all();
        }
    } flight_guard{*this, digest};

    CacheRecord rec;
    long latency_ms = 0;
    if (config_.backend == GatewayBackend::mock) {
        rec = call_mock(turns, digest);
    } else {
        const auto start = std::chrono::steady_clock::now();
        rec = call_remote(body);
        latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
    cache_store(digest, rec);
    return LmmResponse{rec.text, rec.prompt_tokens, rec.completion_tokens, latency_ms, false};
}

CaptionRecord LmmGateway::caption(const ImagePart& image, const std::string& image_id) {
    ChatTurn turn{ChatRole::user, {}};
    turn.parts.push_back(TextPart{kDescribePrompt});
    turn.parts.push_back(image);
    const LmmResponse response = complete({turn});
    return CaptionRecord{image_id, response.text};
}

CaptionRecord LmmGateway::caption(const ImageRef& image, const std::string& image_id) {
    return caption(resolve_image(image), image_id);
}

}  // namespace inimage
