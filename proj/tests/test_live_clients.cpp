#include "doctest.h"

#include "dra/errors.hpp"
#include "dra/llm/chat_backend.hpp"
#include "dra/search/http_client.hpp"
#include "httplib.h"
#include "test_support.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

using namespace dra;

namespace {

/// In-process HTTP server on a random loopback port.
class LocalServer {
public:
    LocalServer() {
        port_ = server_.bind_to_any_port("127.0.0.1");
        REQUIRE(port_ > 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~LocalServer() {
        server_.stop();
        thread_.join();
    }

    httplib::Server& server() { return server_; }

    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

std::string chat_envelope(const std::string& content) {
    nlohmann::json message;
    message["role"] = "assistant";
    message["content"] = content;
    nlohmann::json choice;
    choice["message"] = message;
    nlohmann::json envelope;
    envelope["choices"] = nlohmann::json::array({choice});
    return envelope.dump();
}

ChatBackendConfig chat_config(const LocalServer& server) {
    ChatBackendConfig config;
    config.base_url = server.base_url();
    config.api_key = "test-key";
    config.chat_path = "/v1/chat/completions";
    config.policy.model_id = "test-model";
    config.policy.max_retries = 2;
    config.policy.timeout = std::chrono::seconds(5);
    return config;
}

SearchClientConfig search_config(const LocalServer& server) {
    SearchClientConfig config;
    config.base_url = server.base_url();
    config.api_key = "search-key";
    config.max_retries = 2;
    config.timeout = std::chrono::seconds(5);
    config.backoff_base = std::chrono::milliseconds(50);
    return config;
}

} // namespace

TEST_CASE("json extraction tries fences, whole body, then brace span") {
    CHECK(extract_json_object("```json\n{\"splittable\": true}\n```")->at("splittable") == true);
    CHECK(extract_json_object("```\n{\"distinct\": false}\n```")->at("distinct") == false);
    CHECK(extract_json_object("  {\"a\": 1}  ")->at("a") == 1);
    CHECK(extract_json_object("Sure! Here you go: {\"a\": 1}. Anything else?")->at("a") == 1);
    CHECK_FALSE(extract_json_object("no json here").has_value());
    CHECK_FALSE(extract_json_object("[1, 2, 3]").has_value());  // object required
}

TEST_CASE("chat gate accepts a well-formed negative answer without retries") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request& req, httplib::Response& res) {
                             ++hits;
                             CHECK(req.get_header_value("Authorization") == "Bearer test-key");
                             const auto body = nlohmann::json::parse(req.body);
                             CHECK(body.at("model") == "test-model");
                             res.set_content(
                                 chat_envelope("```json\n{\"splittable\": false}\n```"),
                                 "application/json");
                         });

    ChatLlmBackend backend(chat_config(server));
    CHECK_FALSE(backend.can_split_into_subtasks("a topic"));
    CHECK(hits == 1);
    CHECK(backend.stats().retries == 0);
    CHECK(backend.stats().split_calls == 1);
}

TEST_CASE("a malformed reply triggers one repair reprompt") {
    LocalServer server;
    std::atomic<int> hits{0};
    std::mutex mutex;
    std::vector<std::string> request_bodies;
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request& req, httplib::Response& res) {
                             const int hit = ++hits;
                             {
                                 const std::lock_guard lock(mutex);
                                 request_bodies.push_back(req.body);
                             }
                             if (hit == 1) {
                                 res.set_content(chat_envelope("I believe it can be split!"),
                                                 "application/json");
                             } else {
                                 res.set_content(
                                     chat_envelope("```json\n{\"splittable\": true}\n```"),
                                     "application/json");
                             }
                         });

    ChatLlmBackend backend(chat_config(server));
    CHECK(backend.can_split_into_subtasks("a topic"));
    CHECK(hits == 2);
    CHECK(backend.stats().retries == 1);

    // The reprompt carries the malformed answer and a repair instruction.
    REQUIRE(request_bodies.size() == 2);
    const auto second = nlohmann::json::parse(request_bodies[1]);
    REQUIRE(second.at("messages").size() == 3);
    CHECK(second.at("messages")[1].at("role") == "assistant");
    CHECK(second.at("messages")[1].at("content") == "I believe it can be split!");
    const std::string repair = second.at("messages")[2].at("content").get<std::string>();
    CHECK(repair.find("did not match the requested format") != std::string::npos);
}

TEST_CASE("persistent malformed replies exhaust the retry budget") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request&, httplib::Response& res) {
                             ++hits;
                             res.set_content(chat_envelope("still not json"),
                                             "application/json");
                         });

    ChatLlmBackend backend(chat_config(server));
    CHECK_THROWS_AS(backend.can_split_into_subtasks("a topic"), BackendError);
    CHECK(hits == 3);  // first attempt + max_retries
    CHECK(backend.stats().retries == 2);
}

TEST_CASE("transport errors are retried without a repair reprompt") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request& req, httplib::Response& res) {
                             const int hit = ++hits;
                             // A retried transport failure must not grow the dialogue.
                             const auto body = nlohmann::json::parse(req.body);
                             CHECK(body.at("messages").size() == 1);
                             if (hit < 3) {
                                 res.status = 500;
                                 res.set_content("upstream exploded", "text/plain");
                             } else {
                                 res.set_content(
                                     chat_envelope("```json\n{\"splittable\": true}\n```"),
                                     "application/json");
                             }
                         });

    ChatLlmBackend backend(chat_config(server));
    CHECK(backend.can_split_into_subtasks("a topic"));
    CHECK(hits == 3);
    CHECK(backend.stats().retries == 2);
}

TEST_CASE("chat decomposition parses sub_queries and respects max_count") {
    LocalServer server;
    server.server().Post(
        "/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
            res.set_content(
                chat_envelope(
                    "```json\n{\"sub_queries\": [\"alpha\", \"beta\", \"gamma\"]}\n```"),
                "application/json");
        });

    ChatLlmBackend backend(chat_config(server));
    CHECK(backend.decompose_topic("topic", 5) ==
          std::vector<std::string>{"alpha", "beta", "gamma"});
    // The wrapper truncates over-length answers.
    CHECK(backend.decompose_topic("topic", 2) == std::vector<std::string>{"alpha", "beta"});
}

TEST_CASE("chat uniqueness gate parses distinct and skips empty-past calls") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request&, httplib::Response& res) {
                             ++hits;
                             res.set_content(chat_envelope("{\"distinct\": false}"),
                                             "application/json");
                         });

    ChatLlmBackend backend(chat_config(server));
    CHECK(backend.is_different_research_topic("t", {}));
    CHECK(hits == 0);  // vacuous distinctness never reaches the network
    CHECK_FALSE(backend.is_different_research_topic("t", {"earlier"}));
    CHECK(hits == 1);
    CHECK(backend.stats().retries == 0);
}

TEST_CASE("chat section writing returns the reply body verbatim") {
    LocalServer server;
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request&, httplib::Response& res) {
                             res.set_content(chat_envelope("A grounded markdown section."),
                                             "application/json");
                         });

    ChatLlmBackend backend(chat_config(server));
    const std::vector<SearchResult> evidence = {
        dra::test::make_result("T", "https://t", "c", 0.8)};
    CHECK(backend.write_section("topic", evidence) == "A grounded markdown section.");
}

TEST_CASE("debug sink redacts the API key") {
    LocalServer server;
    server.server().Post("/v1/chat/completions",
                         [&](const httplib::Request&, httplib::Response& res) {
                             res.set_content(
                                 chat_envelope("```json\n{\"splittable\": false}\n```"),
                                 "application/json");
                         });

    ChatLlmBackend backend(chat_config(server));
    std::ostringstream sink;
    backend.set_debug_sink(&sink);
    backend.can_split_into_subtasks("a topic");
    const std::string log = sink.str();
    CHECK_FALSE(log.empty());
    CHECK(log.find("test-key") == std::string::npos);
}

TEST_CASE("search client sends query and max_results and parses the wire shape") {
    LocalServer server;
    server.server().Post("/search", [&](const httplib::Request& req, httplib::Response& res) {
        const auto body = nlohmann::json::parse(req.body);
        CHECK(body.at("query") == "Lionel Messi facts");
        CHECK(body.at("max_results") == 5);
        CHECK(req.get_header_value("Authorization") == "Bearer search-key");
        nlohmann::json hit;
        hit["title"] = "Lionel Messi Facts";
        hit["url"] = "https://example.com/messi";
        hit["content"] = "Career summary.";
        hit["score"] = 0.81025416;
        hit["raw_content"] = nullptr;
        hit["favicon"] = "https://example.com/fav.ico";
        nlohmann::json envelope;
        envelope["results"] = nlohmann::json::array({hit});
        res.set_content(envelope.dump(), "application/json");
    });

    HttpSearchClient client(search_config(server));
    const auto hits = client.search_web("Lionel Messi facts", 5);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].title == "Lionel Messi Facts");
    CHECK(hits[0].score == doctest::Approx(0.81025416).epsilon(1e-12));
    CHECK_FALSE(hits[0].raw_content.has_value());
    CHECK(hits[0].favicon.has_value());
    CHECK(client.stats().search_calls == 1);
    CHECK(client.stats().retries == 0);
}

TEST_CASE("search client truncates over-long result lists to top_k") {
    LocalServer server;
    server.server().Post("/search", [&](const httplib::Request&, httplib::Response& res) {
        nlohmann::json results = nlohmann::json::array();
        for (int i = 0; i < 7; ++i) {
            results.push_back({{"title", "t"},
                               {"url", "https://example.com/" + std::to_string(i)},
                               {"content", "c"},
                               {"score", 0.5}});
        }
        res.set_content(nlohmann::json{{"results", results}}.dump(), "application/json");
    });

    HttpSearchClient client(search_config(server));
    CHECK(client.search_web("seven", 5).size() == 5);
}

TEST_CASE("HTTP 429 backs off exponentially within the retry budget") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/search", [&](const httplib::Request&, httplib::Response& res) {
        const int hit = ++hits;
        if (hit <= 2) {
            res.status = 429;
            res.set_content("slow down", "text/plain");
        } else {
            res.set_content(R"({"results": []})", "application/json");
        }
    });

    HttpSearchClient client(search_config(server));
    const auto start = std::chrono::steady_clock::now();
    CHECK(client.search_web("rate limited", 5).empty());
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(hits == 3);
    CHECK(client.stats().retries == 2);
    // Two backoff sleeps: base * 1 plus base * 2 with base = 50 ms.
    CHECK(elapsed >= std::chrono::milliseconds(140));
}

TEST_CASE("persistent search failures exhaust the retry budget") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/search", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.status = 503;
        res.set_content("unavailable", "text/plain");
    });

    HttpSearchClient client(search_config(server));
    try {
        client.search_web("doomed query", 5);
        FAIL("expected SearchError");
    } catch (const SearchError& e) {
        const std::string what = e.what();
        CHECK(what.find("doomed query") != std::string::npos);
        CHECK(what.find("retries exhausted") != std::string::npos);
    }
    CHECK(hits == 3);
}

TEST_CASE("a response without a results array is retried then fails") {
    LocalServer server;
    std::atomic<int> hits{0};
    server.server().Post("/search", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content(R"({"unexpected": true})", "application/json");
    });

    HttpSearchClient client(search_config(server));
    CHECK_THROWS_AS(client.search_web("odd shape", 5), SearchError);
    CHECK(hits == 3);
}
