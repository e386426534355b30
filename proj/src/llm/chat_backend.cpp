#include "dra/llm/chat_backend.hpp"

#include "dra/errors.hpp"
#include "httplib.h"

#include <utility>

namespace dra {

namespace {

// Transport-level failure: retried without a repair reprompt.
struct TransportFailure {
    std::string what;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::optional<nlohmann::json> try_parse(const std::string& text) {
    const auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
        return std::nullopt;
    }
    return parsed;
}

std::optional<std::string> fenced_block(const std::string& content, const std::string& opener) {
    const auto start = content.find(opener);
    if (start == std::string::npos) {
        return std::nullopt;
    }
    const auto body_start = start + opener.size();
    const auto end = content.find("```", body_start);
    if (end == std::string::npos) {
        return std::nullopt;
    }
    return content.substr(body_start, end - body_start);
}

constexpr const char* kRepairInstruction =
    "Your previous reply did not match the requested format. Reply again with "
    "ONLY a fenced json block of the exact shape requested, and no other text.";

} // namespace

std::optional<nlohmann::json> extract_json_object(const std::string& content) {
    if (const auto block = fenced_block(content, "```json")) {
        if (auto parsed = try_parse(trim(*block))) {
            return parsed;
        }
    }
    if (const auto block = fenced_block(content, "```")) {
        if (auto parsed = try_parse(trim(*block))) {
            return parsed;
        }
    }
    if (auto parsed = try_parse(trim(content))) {
        return parsed;
    }
    const auto first = content.find('{');
    const auto last = content.rfind('}');
    if (first != std::string::npos && last != std::string::npos && last > first) {
        return try_parse(content.substr(first, last - first + 1));
    }
    return std::nullopt;
}

ChatLlmBackend::ChatLlmBackend(ChatBackendConfig config, PromptLibrary prompts)
    : config_(std::move(config)),
      prompts_(std::move(prompts)),
      gate_(config_.max_concurrent) {}

void ChatLlmBackend::debug(const std::string& line) const {
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
    *debug_sink_ << "[llm] " << redacted << '\n';
}

std::string ChatLlmBackend::complete_once(const std::vector<Message>& messages) {
    const ConcurrencyGate::Slot slot(gate_);

    nlohmann::json payload{{"model", config_.policy.model_id}};
    auto& body_messages = payload["messages"] = nlohmann::json::array();
    for (const auto& message : messages) {
        body_messages.push_back({{"role", message.role}, {"content", message.content}});
    }
    const std::string body = payload.dump();
    debug("request " + config_.chat_path + " " + body);

    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.policy.timeout);
    client.set_read_timeout(config_.policy.timeout);
    client.set_write_timeout(config_.policy.timeout);
    httplib::Headers headers;
    if (!config_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + config_.api_key);
    }

    const auto response = client.Post(config_.chat_path, headers, body, "application/json");
    if (!response) {
        throw TransportFailure{"no response from " + config_.base_url + ": " +
                               httplib::to_string(response.error())};
    }
    debug("response status=" + std::to_string(response->status) + " " + response->body);
    if (response->status != 200) {
        throw TransportFailure{"HTTP " + std::to_string(response->status) + " from " +
                               config_.base_url + config_.chat_path};
    }
    const auto envelope = nlohmann::json::parse(response->body, nullptr, false);
    if (envelope.is_discarded()) {
        throw TransportFailure{"response body is not valid JSON"};
    }
    try {
        return envelope.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        throw TransportFailure{"response lacks choices[0].message.content"};
    }
}

template <typename T>
T ChatLlmBackend::call_with_retries(
    const std::string& kind, const std::string& prompt,
    const std::function<std::optional<T>(const std::string&)>& parse) {
    int attempts_left = config_.policy.max_retries;
    std::vector<Message> messages{{"user", prompt}};
    std::string last_error;

    while (true) {
        std::string content;
        try {
            content = complete_once(messages);
        } catch (const TransportFailure& failure) {
            last_error = failure.what;
            if (attempts_left == 0) {
                throw BackendError(kind + ": " + last_error + " (retries exhausted)");
            }
            --attempts_left;
            note_retry();
            continue;
        }
        if (auto value = parse(content)) {
            return *value;
        }
        last_error = "malformed reply";
        if (attempts_left == 0) {
            throw BackendError(kind + ": " + last_error + " (retries exhausted)");
        }
        --attempts_left;
        note_retry();
        messages.push_back({"assistant", content});
        messages.push_back({"user", kRepairInstruction});
    }
}

bool ChatLlmBackend::do_can_split(const std::string& topic) {
    const std::string prompt = prompts_.render("split_gate", {{"topic", topic}});
    return call_with_retries<bool>("split gate", prompt,
                                   [](const std::string& content) -> std::optional<bool> {
                                       const auto obj = extract_json_object(content);
                                       if (!obj || !obj->contains("splittable") ||
                                           !(*obj)["splittable"].is_boolean()) {
                                           return std::nullopt;
                                       }
                                       return (*obj)["splittable"].get<bool>();
                                   });
}

std::vector<std::string> ChatLlmBackend::do_decompose(const std::string& topic, int max_count) {
    const std::string prompt = prompts_.render(
        "decompose_topic", {{"topic", topic}, {"max_count", std::to_string(max_count)}});
    return call_with_retries<std::vector<std::string>>(
        "decomposition", prompt,
        [](const std::string& content) -> std::optional<std::vector<std::string>> {
            const auto obj = extract_json_object(content);
            if (!obj || !obj->contains("sub_queries") || !(*obj)["sub_queries"].is_array()) {
                return std::nullopt;
            }
            std::vector<std::string> sub_queries;
            for (const auto& entry : (*obj)["sub_queries"]) {
                if (!entry.is_string()) {
                    return std::nullopt;
                }
                sub_queries.push_back(entry.get<std::string>());
            }
            return sub_queries;
        });
}

bool ChatLlmBackend::do_is_different(const std::string& topic,
                                     const std::vector<std::string>& past_topics) {
    const std::string prompt =
        prompts_.render("uniqueness_gate",
                        {{"topic", topic}, {"past_topics", nlohmann::json(past_topics).dump(2)}});
    return call_with_retries<bool>("uniqueness gate", prompt,
                                   [](const std::string& content) -> std::optional<bool> {
                                       const auto obj = extract_json_object(content);
                                       if (!obj || !obj->contains("distinct") ||
                                           !(*obj)["distinct"].is_boolean()) {
                                           return std::nullopt;
                                       }
                                       return (*obj)["distinct"].get<bool>();
                                   });
}

std::string ChatLlmBackend::do_write_section(const std::string& topic,
                                             const std::vector<SearchResult>& evidence) {
    nlohmann::json evidence_json = nlohmann::json::array();
    for (const auto& result : evidence) {
        evidence_json.push_back({{"title", result.title},
                                 {"url", result.url},
                                 {"content", result.content},
                                 {"score", result.score}});
    }
    const std::string prompt = prompts_.render(
        "write_section", {{"topic", topic}, {"evidence", evidence_json.dump(2)}});
    return call_with_retries<std::string>(
        "section writing", prompt,
        [](const std::string& content) -> std::optional<std::string> {
            if (trim(content).empty()) {
                return std::nullopt;
            }
            return content;
        });
}

} // namespace dra
