#pragma once

#include "dra/search/result.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

namespace dra {

/// Call counters shared by every search client implementation.
struct SearchCallStats {
    std::int64_t search_calls = 0;
    std::int64_t retries = 0;
};

/// Web-search interface used by worker agents. Implementations must be
/// safely callable from concurrent subtree executions.
class SearchClient {
public:
    virtual ~SearchClient() = default;

    /// At most top_k results in backend-returned order. Throws SearchError
    /// after the implementation's retry budget is exhausted, and
    /// std::invalid_argument on an empty query or top_k < 1.
    std::vector<SearchResult> search_web(const std::string& query, int top_k);

    SearchCallStats stats() const;

protected:
    virtual std::vector<SearchResult> do_search(const std::string& query, int top_k) = 0;

    void note_retry();

private:
    std::atomic<std::int64_t> search_calls_{0};
    std::atomic<std::int64_t> retries_{0};
};

/// Keeps exactly the results whose score >= threshold, preserving order.
/// A result scoring exactly the threshold is kept.
std::vector<SearchResult> filter_by_relevance(const std::vector<SearchResult>& results,
                                              double threshold);

} // namespace dra
