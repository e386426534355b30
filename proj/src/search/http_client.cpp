#include "dra/search/http_client.hpp"

#include "dra/errors.hpp"
#include "httplib.h"
#include "json.hpp"

#include <thread>
#include <utility>

namespace dra {

HttpSearchClient::HttpSearchClient(SearchClientConfig config)
    : config_(std::move(config)), gate_(config_.max_concurrent) {}

void HttpSearchClient::debug(const std::string& line) const {
    if (!debug_sink_) {
        return;
    }
    std::string redacted = line;
    if (!config_.api_key.empty()) {
        std::size_t pos = 0;
        while ((pos = redacted.find(config_.api_key, pos)) != std::string::npos) {
            redacted.replace(pos, config_.api_key.size(), "***");
            pos += 3;
        }
    }
    *debug_sink_ << "[search] " << redacted << '\n';
}

std::vector<SearchResult> HttpSearchClient::do_search(const std::string& query, int top_k) {
    const nlohmann::json payload{{"query", query}, {"max_results", top_k}};
    const std::string body = payload.dump();

    int attempts_left = config_.max_retries;
    int backoff_step = 0;
    std::string last_error;

    while (true) {
        std::string response_body;
        bool ok = false;
        bool throttled = false;
        {
            const ConcurrencyGate::Slot slot(gate_);
            debug("request " + config_.search_path + " " + body);
            httplib::Client client(config_.base_url);
            client.set_connection_timeout(config_.timeout);
            client.set_read_timeout(config_.timeout);
            client.set_write_timeout(config_.timeout);
            httplib::Headers headers;
            if (!config_.api_key.empty()) {
                headers.emplace("Authorization", "Bearer " + config_.api_key);
            }
            const auto response =
                client.Post(config_.search_path, headers, body, "application/json");
            if (!response) {
                last_error = "no response from " + config_.base_url + ": " +
                             httplib::to_string(response.error());
            } else {
                debug("response status=" + std::to_string(response->status) + " " +
                      response->body);
                if (response->status == 200) {
                    response_body = response->body;
                    ok = true;
                } else {
                    throttled = response->status == 429;
                    last_error = "HTTP " + std::to_string(response->status) + " from " +
                                 config_.base_url + config_.search_path;
                }
            }
        }

        if (ok) {
            const auto envelope = nlohmann::json::parse(response_body, nullptr, false);
            if (envelope.is_discarded() || !envelope.contains("results")) {
                last_error = "response lacks a results array";
            } else {
                return parse_search_results(envelope.at("results"),
                                            config_.base_url + config_.search_path);
            }
        }

        if (attempts_left == 0) {
            throw SearchError("search failed for \"" + query + "\": " + last_error +
                              " (retries exhausted)");
        }
        --attempts_left;
        note_retry();
        if (throttled) {
            std::this_thread::sleep_for(config_.backoff_base * (1 << backoff_step));
            ++backoff_step;
        }
    }
}

} // namespace dra
