#include "dra/search/client.hpp"

#include "dra/errors.hpp"

#include <stdexcept>

namespace dra {

std::vector<SearchResult> SearchClient::search_web(const std::string& query, int top_k) {
    if (query.empty()) {
        throw std::invalid_argument("search_web: query must be non-empty");
    }
    if (top_k < 1) {
        throw std::invalid_argument("search_web: top_k must be >= 1");
    }
    search_calls_.fetch_add(1, std::memory_order_relaxed);
    std::vector<SearchResult> results = do_search(query, top_k);
    if (results.size() > static_cast<std::size_t>(top_k)) {
        results.resize(static_cast<std::size_t>(top_k));
    }
    return results;
}

SearchCallStats SearchClient::stats() const {
    return SearchCallStats{
        search_calls_.load(std::memory_order_relaxed),
        retries_.load(std::memory_order_relaxed),
    };
}

void SearchClient::note_retry() {
    retries_.fetch_add(1, std::memory_order_relaxed);
}

std::vector<SearchResult> filter_by_relevance(const std::vector<SearchResult>& results,
                                              double threshold) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("filter_by_relevance: threshold must lie in [0, 1]");
    }
    std::vector<SearchResult> kept;
    kept.reserve(results.size());
    for (const auto& result : results) {
        if (result.score >= threshold) {
            kept.push_back(result);
        }
    }
    return kept;
}

} // namespace dra
