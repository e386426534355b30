#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dra {

/// One web-search hit. Field names match the search API wire format
/// one-to-one: title, url, content, score, raw_content, favicon.
struct SearchResult {
    std::string title;
    std::string url;
    std::string content;
    double score = 0.0;  // relevance, in [0, 1]
    std::optional<std::string> raw_content;
    std::optional<std::string> favicon;

    bool operator==(const SearchResult&) const = default;
};

void to_json(nlohmann::json& j, const SearchResult& result);

/// Throws SearchError when url is missing/empty or score is absent or
/// outside [0, 1]. title/content default to empty, raw_content/favicon
/// to null when absent.
void from_json(const nlohmann::json& j, SearchResult& result);

/// Parses a JSON array of search hits. Throws SearchError on any malformed
/// entry; `context` names the source (a URL or file path) in the message.
std::vector<SearchResult> parse_search_results(const nlohmann::json& array,
                                               const std::string& context);

} // namespace dra
