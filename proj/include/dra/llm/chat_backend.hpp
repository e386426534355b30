#pragma once

#include "dra/llm/backend.hpp"
#include "dra/llm/prompts.hpp"
#include "dra/util/concurrency_gate.hpp"
#include "json.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dra {

struct ChatBackendConfig {
    std::string base_url;  // scheme://host[:port]
    std::string api_key;
    std::string chat_path = "/v1/chat/completions";
    LlmRequestPolicy policy;
    int max_concurrent = 4;
};

/// Best-effort extraction of a JSON object from a model reply: a ```json
/// fence, any ``` fence, the whole body, or the outermost {...} span,
/// in that order.
std::optional<nlohmann::json> extract_json_object(const std::string& content);

/// Chat-completion HTTP client implementing the four LLM contracts.
///
/// Gate and decomposition calls request a fenced json block; one malformed
/// reply triggers one repair reprompt, counted against max_retries alongside
/// transport failures. Well-formed negative answers are returned as-is and
/// consume no retries.
class ChatLlmBackend : public LlmBackend {
public:
    explicit ChatLlmBackend(ChatBackendConfig config,
                            PromptLibrary prompts = PromptLibrary::builtin());

    /// Logs request/response bodies to `sink` with the API key redacted.
    void set_debug_sink(std::ostream* sink) { debug_sink_ = sink; }

protected:
    bool do_can_split(const std::string& topic) override;
    std::vector<std::string> do_decompose(const std::string& topic, int max_count) override;
    bool do_is_different(const std::string& topic,
                         const std::vector<std::string>& past_topics) override;
    std::string do_write_section(const std::string& topic,
                                 const std::vector<SearchResult>& evidence) override;

private:
    struct Message {
        std::string role;
        std::string content;
    };

    // One transport attempt; throws BackendError on failure.
    std::string complete_once(const std::vector<Message>& messages);

    // Full retry/repair loop. `parse` returns nullopt for malformed content.
    template <typename T>
    T call_with_retries(const std::string& kind, const std::string& prompt,
                        const std::function<std::optional<T>(const std::string&)>& parse);

    void debug(const std::string& line) const;

    ChatBackendConfig config_;
    PromptLibrary prompts_;
    mutable ConcurrencyGate gate_;
    std::ostream* debug_sink_ = nullptr;
};

} // namespace dra
