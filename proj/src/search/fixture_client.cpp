#include "dra/search/fixture_client.hpp"

#include "dra/errors.hpp"
#include "dra/util/hash.hpp"

#include <fstream>
#include <utility>

namespace dra {

std::string fixture_file_name(const std::string& query) {
    return fnv1a64_hex(query) + ".json";
}

FixtureSearchClient::FixtureSearchClient(std::filesystem::path fixture_dir)
    : fixture_dir_(std::move(fixture_dir)) {}

std::vector<SearchResult> FixtureSearchClient::do_search(const std::string& query, int /*top_k*/) {
    const std::filesystem::path path = fixture_dir_ / fixture_file_name(query);
    if (!std::filesystem::exists(path)) {
        return {};
    }
    std::ifstream in(path);
    if (!in) {
        throw SearchError("fixture unreadable: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SearchError("fixture is not valid JSON: " + path.string() + ": " + e.what());
    }
    return parse_search_results(doc, path.string());
}

void FixtureSearchClient::write_fixture(const std::filesystem::path& fixture_dir,
                                        const std::string& query,
                                        const std::vector<SearchResult>& results) {
    std::filesystem::create_directories(fixture_dir);
    const std::filesystem::path path = fixture_dir / fixture_file_name(query);
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write fixture: " + path.string());
    }
    out << nlohmann::json(results).dump(2) << '\n';
}

} // namespace dra
