#pragma once

#include "dra/search/client.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dra {

/// Filename (without directory) a query's fixture document lives under:
/// the query's fnv1a64 hex digest plus ".json".
std::string fixture_file_name(const std::string& query);

/// Offline search client backed by a directory of JSON documents, one per
/// query. Each document is an array of search-result objects in wire format.
/// A query with no document yields zero results.
class FixtureSearchClient : public SearchClient {
public:
    explicit FixtureSearchClient(std::filesystem::path fixture_dir);

    const std::filesystem::path& fixture_dir() const { return fixture_dir_; }

    /// Writes `results` as the fixture document for `query`, creating the
    /// directory if needed. Test and capture helper.
    static void write_fixture(const std::filesystem::path& fixture_dir, const std::string& query,
                              const std::vector<SearchResult>& results);

protected:
    std::vector<SearchResult> do_search(const std::string& query, int top_k) override;

private:
    std::filesystem::path fixture_dir_;
};

} // namespace dra
