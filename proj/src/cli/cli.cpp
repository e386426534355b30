#include "dra/cli/cli.hpp"

#include "CLI11.hpp"
#include "dra/agents/orchestrator.hpp"
#include "dra/agents/run_log.hpp"
#include "dra/core/scheduler.hpp"
#include "dra/errors.hpp"
#include "dra/llm/chat_backend.hpp"
#include "dra/llm/scripted_backend.hpp"
#include "dra/report/report.hpp"
#include "dra/search/fixture_client.hpp"
#include "dra/search/http_client.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <sstream>

namespace dra::cli {

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value && *value ? std::string(value) : fallback;
}

std::string require_env(const char* name) {
    const char* value = std::getenv(name);
    if (!value || !*value) {
        throw CredentialsError(std::string("missing required environment variable ") + name);
    }
    return value;
}

std::string caps_to_string(const std::vector<int>& caps) {
    std::string out = "[";
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(caps[i]);
    }
    out += "]";
    return out;
}

} // namespace

std::string slugify(const std::string& topic) {
    std::string slug;
    bool pending_dash = false;
    for (const char c : topic) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            if (pending_dash && !slug.empty()) {
                slug += '-';
            }
            pending_dash = false;
            slug += static_cast<char>(std::tolower(uc));
        } else {
            pending_dash = true;
        }
        if (slug.size() >= 60) {
            break;
        }
    }
    return slug.empty() ? "research" : slug;
}

std::filesystem::path default_output_path(const std::string& topic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y%m%d-%H%M%S", &utc);
    return slugify(topic) + "-" + stamp + ".md";
}

std::filesystem::path behavior_file(const std::filesystem::path& fixture_dir) {
    return fixture_dir / "behavior.json";
}

std::filesystem::path search_fixture_dir(const std::filesystem::path& fixture_dir) {
    return fixture_dir / "search";
}

CliInvocation parse_args(const std::vector<std::string>& args) {
    CliInvocation inv;
    CLI::App app{"Hierarchical deep-research engine: recursively decomposes a topic,"
                 " researches the leaves against a web-search backend, and writes a"
                 " markdown report with table of contents and citations."};
    app.name("deep-research");

    app.add_option("--topic", inv.topic, "Research topic")->required();
    app.add_option("--depth", inv.depth, "Decomposition levels below the root (>= 0)")
        ->capture_default_str()
        ->check(CLI::Range(0, 1 << 20));
    app.add_option("--breadth", inv.breadth, "Max sub-topics per decomposition (>= 1)")
        ->capture_default_str()
        ->check(CLI::Range(1, 1 << 20));
    app.add_option("--model", inv.model, "LLM model identifier")->capture_default_str();
    std::string output;
    app.add_option("--output", output, "Report path (default: <topic-slug>-<timestamp>.md)");
    std::string backend = "live";
    app.add_option("--backend", backend, "Backend mode")
        ->capture_default_str()
        ->check(CLI::IsMember({"live", "scripted"}));
    std::string fixture_dir;
    app.add_option("--fixture-dir", fixture_dir,
                   "Directory with behavior.json and search/ fixtures (scripted mode)");
    app.add_flag("--dry-run", inv.dry_run,
                 "Print the call budget for this configuration and exit; no backend calls");

    app.footer(std::string("Environment variables (live mode):\n  ") + kLlmApiKeyEnv +
               "      LLM API key (required)\n  " + kLlmBaseUrlEnv +
               "     chat-completion base URL (default https://generativelanguage.googleapis.com)\n  " +
               kLlmChatPathEnv +
               "    chat-completion path (default /v1beta/openai/chat/completions)\n  " +
               kSearchApiKeyEnv + "   web-search API key (required)\n  " + kSearchBaseUrlEnv +
               "  web-search base URL (default https://api.tavily.com)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        inv.help = true;
        inv.help_text = app.help();
        return inv;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    inv.output = output;
    inv.backend_mode = backend == "scripted" ? BackendMode::scripted : BackendMode::live;
    if (!fixture_dir.empty()) {
        inv.fixture_dir = std::filesystem::path(fixture_dir);
    }

    if (inv.backend_mode == BackendMode::scripted) {
        if (!inv.fixture_dir) {
            throw UsageError("--backend scripted requires --fixture-dir");
        }
        if (!std::filesystem::exists(behavior_file(*inv.fixture_dir))) {
            throw UsageError("--fixture-dir has no scripted-behavior file: " +
                             behavior_file(*inv.fixture_dir).string());
        }
    }
    return inv;
}

std::string run_dry_run(const CliInvocation& inv) {
    const BudgetEstimate estimate = max_worker_topics(inv.depth, inv.breadth);
    const std::int64_t nodes = max_tree_nodes(inv.depth, inv.breadth);
    const std::int64_t workers = estimate.max_worker_topics;

    std::ostringstream out;
    out << "dry run: no backend calls will be made\n";
    out << "topic: " << inv.topic << "\n";
    out << "depth: " << inv.depth << "\n";
    out << "breadth: " << inv.breadth << "\n";
    out << "per-level caps: " << caps_to_string(estimate.per_level_caps) << "\n";
    out << "max worker topics: " << workers << "\n";
    out << "section calls: <= " << workers << "\n";
    out << "search calls: <= " << workers << "\n";
    out << "split-gate calls: <= " << nodes << "\n";
    out << "uniqueness-gate calls: <= " << nodes << "\n";
    out << "total llm calls: <= " << workers + 2 * nodes << "\n";
    return out.str();
}

Backends make_default_backends(const CliInvocation& inv) {
    Backends backends;
    if (inv.backend_mode == BackendMode::scripted) {
        backends.llm = std::make_unique<ScriptedLlmBackend>(
            load_scripted_behavior(behavior_file(*inv.fixture_dir)));
        backends.search =
            std::make_unique<FixtureSearchClient>(search_fixture_dir(*inv.fixture_dir));
        return backends;
    }

    ChatBackendConfig chat;
    chat.api_key = require_env(kLlmApiKeyEnv);
    chat.base_url = env_or(kLlmBaseUrlEnv, "https://generativelanguage.googleapis.com");
    chat.chat_path = env_or(kLlmChatPathEnv, "/v1beta/openai/chat/completions");
    chat.policy.model_id = inv.model;
    backends.llm = std::make_unique<ChatLlmBackend>(chat);

    SearchClientConfig search;
    search.api_key = require_env(kSearchApiKeyEnv);
    search.base_url = env_or(kSearchBaseUrlEnv, "https://api.tavily.com");
    backends.search = std::make_unique<HttpSearchClient>(search);
    return backends;
}

int run_main(const CliInvocation& inv, std::ostream& out, std::ostream& err,
             const BackendFactory& factory) {
    if (inv.help) {
        out << inv.help_text;
        return static_cast<int>(ExitCode::ok);
    }
    if (inv.dry_run) {
        out << run_dry_run(inv);
        return static_cast<int>(ExitCode::ok);
    }

    Backends backends;
    try {
        backends = factory ? factory(inv) : make_default_backends(inv);
    } catch (const CredentialsError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::credentials);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::fatal_backend);
    }

    AgentConfig config;
    config.depth = inv.depth;
    config.breadth = inv.breadth;
    config.model_id = inv.model;
    std::filesystem::path output = inv.output.empty() ? default_output_path(inv.topic) : inv.output;
    if (output.extension() != ".md") {
        output += ".md";
    }
    config.output_path = output;

    RunLog log(err);
    try {
        const ReportDocument doc =
            deep_research(inv.topic, config, *backends.llm, *backends.search, &log);
        save_report(doc, output);

        const LlmCallStats llm_stats = backends.llm->stats();
        const SearchCallStats search_stats = backends.search->stats();
        out << "report written: " << output.string() << "\n";
        out << "sections: " << doc.sections.size() << "\n";
        out << "citations: " << doc.citations.size() << "\n";
        out << "llm calls: " << llm_stats.total_calls() << "\n";
        out << "search calls: " << search_stats.search_calls << "\n";
        return static_cast<int>(ExitCode::ok);
    } catch (const EmptyResearchError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::empty_research);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::fatal_backend);
    }
}

int main_entry(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    try {
        const CliInvocation inv = parse_args(args);
        return run_main(inv, std::cout, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "run with --help for details\n";
        return static_cast<int>(ExitCode::usage);
    }
}

} // namespace dra::cli
