#include "dra/core/model.hpp"

#include "dra/errors.hpp"

#include <string>

namespace dra {

void validate_config(const AgentConfig& config) {
    if (config.depth < 0) {
        throw ConfigError("depth must be >= 0, got " + std::to_string(config.depth));
    }
    if (config.breadth < 1) {
        throw ConfigError("breadth must be >= 1, got " + std::to_string(config.breadth));
    }
    if (config.search_top_k < 1) {
        throw ConfigError("search_top_k must be >= 1, got " + std::to_string(config.search_top_k));
    }
    if (config.relevance_threshold < 0.0 || config.relevance_threshold > 1.0) {
        throw ConfigError("relevance_threshold must lie in [0, 1], got " +
                          std::to_string(config.relevance_threshold));
    }
}

ResearchState new_root_state(const std::string& topic, const AgentConfig& config) {
    validate_config(config);
    ResearchState state;
    state.current_depth = config.depth;
    state.current_breadth = config.breadth;
    state.current_topic = topic;
    return state;
}

ResearchState merge_child_state(ResearchState parent, const ResearchState& child_entries) {
    parent.past_topics.insert(parent.past_topics.end(), child_entries.past_topics.begin(),
                              child_entries.past_topics.end());
    parent.past_citations.insert(parent.past_citations.end(), child_entries.past_citations.begin(),
                                 child_entries.past_citations.end());
    parent.past_reports.insert(parent.past_reports.end(), child_entries.past_reports.begin(),
                               child_entries.past_reports.end());
    return parent;
}

namespace {

template <typename T>
std::vector<T> tail_after(const std::vector<T>& base, const std::vector<T>& evolved,
                          const char* field) {
    if (evolved.size() < base.size()) {
        throw ContractViolation(std::string("new_entries_since: evolved ") + field +
                                " shorter than base");
    }
    return {evolved.begin() + static_cast<std::ptrdiff_t>(base.size()), evolved.end()};
}

} // namespace

ResearchState new_entries_since(const ResearchState& base, const ResearchState& evolved) {
    ResearchState delta;
    delta.current_depth = evolved.current_depth;
    delta.current_breadth = evolved.current_breadth;
    delta.current_topic = evolved.current_topic;
    delta.past_topics = tail_after(base.past_topics, evolved.past_topics, "past_topics");
    delta.past_citations = tail_after(base.past_citations, evolved.past_citations, "past_citations");
    delta.past_reports = tail_after(base.past_reports, evolved.past_reports, "past_reports");
    return delta;
}

} // namespace dra
