#pragma once

#include "dra/search/client.hpp"
#include "dra/util/concurrency_gate.hpp"

#include <chrono>
#include <ostream>
#include <string>

namespace dra {

struct SearchClientConfig {
    std::string base_url;  // scheme://host[:port]
    std::string api_key;
    std::string search_path = "/search";
    int max_retries = 2;
    std::chrono::milliseconds timeout = std::chrono::seconds(30);
    std::chrono::milliseconds backoff_base = std::chrono::milliseconds(200);
    int max_concurrent = 4;
};

/// JSON search API client. Sends {"query", "max_results"}, expects
/// {"results": [...]} with wire-format result objects. Transport failures
/// are retried up to max_retries; HTTP 429 backs off exponentially within
/// the same budget. Exhaustion raises SearchError.
class HttpSearchClient : public SearchClient {
public:
    explicit HttpSearchClient(SearchClientConfig config);

    /// Logs request/response bodies to `sink` with the API key redacted.
    void set_debug_sink(std::ostream* sink) { debug_sink_ = sink; }

protected:
    std::vector<SearchResult> do_search(const std::string& query, int top_k) override;

private:
    void debug(const std::string& line) const;

    SearchClientConfig config_;
    mutable ConcurrencyGate gate_;
    std::ostream* debug_sink_ = nullptr;
};

} // namespace dra
