#include "dra/search/result.hpp"

#include "dra/errors.hpp"

namespace dra {

void to_json(nlohmann::json& j, const SearchResult& result) {
    j = nlohmann::json{
        {"title", result.title},
        {"url", result.url},
        {"content", result.content},
        {"score", result.score},
        {"raw_content", result.raw_content ? nlohmann::json(*result.raw_content)
                                           : nlohmann::json(nullptr)},
        {"favicon", result.favicon ? nlohmann::json(*result.favicon) : nlohmann::json(nullptr)},
    };
}

void from_json(const nlohmann::json& j, SearchResult& result) {
    if (!j.is_object()) {
        throw SearchError("search result is not a JSON object");
    }
    if (!j.contains("url") || !j.at("url").is_string() || j.at("url").get<std::string>().empty()) {
        throw SearchError("search result missing a non-empty url");
    }
    if (!j.contains("score") || !j.at("score").is_number()) {
        throw SearchError("search result missing a numeric score");
    }
    result.url = j.at("url").get<std::string>();
    result.score = j.at("score").get<double>();
    if (result.score < 0.0 || result.score > 1.0) {
        throw SearchError("search result score outside [0, 1]: " + std::to_string(result.score));
    }
    result.title = j.value("title", std::string{});
    result.content = j.value("content", std::string{});
    result.raw_content.reset();
    if (j.contains("raw_content") && j.at("raw_content").is_string()) {
        result.raw_content = j.at("raw_content").get<std::string>();
    }
    result.favicon.reset();
    if (j.contains("favicon") && j.at("favicon").is_string()) {
        result.favicon = j.at("favicon").get<std::string>();
    }
}

std::vector<SearchResult> parse_search_results(const nlohmann::json& array,
                                               const std::string& context) {
    if (!array.is_array()) {
        throw SearchError(context + ": expected a JSON array of search results");
    }
    std::vector<SearchResult> results;
    results.reserve(array.size());
    for (const auto& entry : array) {
        try {
            results.push_back(entry.get<SearchResult>());
        } catch (const SearchError& e) {
            throw SearchError(context + ": " + e.what());
        }
    }
    return results;
}

} // namespace dra
