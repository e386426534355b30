#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace dra {

/// Run-wide parameters shared by every agent in one research run.
struct AgentConfig {
    int depth = 2;    // decomposition levels remaining at the root
    int breadth = 5;  // max sub-topics per decomposition at the root
    std::string model_id = "gemini-2.5-pro";
    int search_top_k = 5;
    double relevance_threshold = 0.30;
    std::filesystem::path output_path;
};

/// Throws ConfigError unless depth >= 0, breadth >= 1, search_top_k >= 1
/// and relevance_threshold lies in [0, 1].
void validate_config(const AgentConfig& config);

/// One worker's finished output.
struct SectionReport {
    std::string topic;
    std::string body;  // markdown
    std::vector<std::string> citations;  // URLs, verbatim from search results
    int order_index = 0;  // position in canonical research order
    int level = 0;        // tree depth of the worker, root = 0

    bool operator==(const SectionReport&) const = default;
};

/// Shared state threaded through the agent tree. The three lists accumulate
/// over a whole run; the scalar fields describe the node currently executing.
struct ResearchState {
    int current_depth = 0;
    int current_breadth = 1;
    std::string current_topic;
    std::vector<std::string> past_topics;
    std::vector<std::string> past_citations;
    std::vector<SectionReport> past_reports;

    bool operator==(const ResearchState&) const = default;
};

/// Builds the state a run starts from. Throws ConfigError on invalid config.
ResearchState new_root_state(const std::string& topic, const AgentConfig& config);

/// Extends the parent's three lists with the child's entries, in order.
/// The parent's current_depth/current_breadth/current_topic are unchanged.
/// `child_entries` carries only what the child run added.
ResearchState merge_child_state(ResearchState parent, const ResearchState& child_entries);

/// Entries `evolved` holds beyond `base`. `evolved` must extend `base`
/// list-wise (same prefix); violating that is a contract violation.
ResearchState new_entries_since(const ResearchState& base, const ResearchState& evolved);

} // namespace dra
