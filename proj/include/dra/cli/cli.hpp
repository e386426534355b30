#pragma once

#include "dra/core/model.hpp"
#include "dra/llm/backend.hpp"
#include "dra/search/client.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dra::cli {

// Credential and endpoint environment variables, documented in --help.
inline constexpr const char* kLlmApiKeyEnv = "DRA_LLM_API_KEY";
inline constexpr const char* kLlmBaseUrlEnv = "DRA_LLM_BASE_URL";
inline constexpr const char* kLlmChatPathEnv = "DRA_LLM_CHAT_PATH";
inline constexpr const char* kSearchApiKeyEnv = "DRA_SEARCH_API_KEY";
inline constexpr const char* kSearchBaseUrlEnv = "DRA_SEARCH_BASE_URL";

enum class ExitCode : int {
    ok = 0,
    usage = 1,
    credentials = 2,
    empty_research = 3,
    fatal_backend = 4,
};

enum class BackendMode { live, scripted };

struct CliInvocation {
    std::string topic;
    int depth = 2;
    int breadth = 5;
    std::string model = "gemini-2.5-pro";
    std::filesystem::path output;  // empty: derived from the topic slug
    BackendMode backend_mode = BackendMode::live;
    std::optional<std::filesystem::path> fixture_dir;
    bool dry_run = false;

    bool help = false;  // --help was given; help_text holds the page
    std::string help_text;
};

/// Filesystem-safe slug of a topic: lowercase alphanumerics with dashes.
std::string slugify(const std::string& topic);

/// Default report path: slug plus a UTC timestamp plus ".md".
std::filesystem::path default_output_path(const std::string& topic);

/// Scripted-behavior document expected inside --fixture-dir.
std::filesystem::path behavior_file(const std::filesystem::path& fixture_dir);

/// Search fixture documents expected inside --fixture-dir.
std::filesystem::path search_fixture_dir(const std::filesystem::path& fixture_dir);

/// Parses and validates argv (program name excluded). Throws UsageError
/// naming the offending flag. A --help request returns with help set.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Cost preview: per-level caps, the worker-topic bound, and upper bounds
/// on gate calls. Pure arithmetic, no backend construction, no network.
std::string run_dry_run(const CliInvocation& inv);

struct Backends {
    std::unique_ptr<LlmBackend> llm;
    std::unique_ptr<SearchClient> search;
};

using BackendFactory = std::function<Backends(const CliInvocation&)>;

/// Live mode: HTTP clients configured from the environment (throws
/// CredentialsError naming any missing key variable). Scripted mode:
/// behavior-file backend plus fixture-directory search.
Backends make_default_backends(const CliInvocation& inv);

/// Executes the invocation end to end and reports per the exit-code table.
/// `factory` defaults to make_default_backends; tests inject counting stubs.
int run_main(const CliInvocation& inv, std::ostream& out, std::ostream& err,
             const BackendFactory& factory = {});

/// Full process entry: parse, run, map errors to exit codes.
int main_entry(int argc, const char* const* argv);

} // namespace dra::cli
