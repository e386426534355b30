#include "dra/agents/orchestrator.hpp"

#include "dra/core/scheduler.hpp"
#include "dra/errors.hpp"

#include <utility>

namespace dra {

Orchestrator::Orchestrator(LlmBackend& llm, SearchClient& search, AgentConfig config, RunLog* log)
    : llm_(llm), search_(search), config_(std::move(config)), log_(log) {
    validate_config(config_);
}

void Orchestrator::log_event(const std::string& node, std::string_view role,
                             std::string_view action, const std::string& outcome) {
    if (log_) {
        log_->event(node, role, action, outcome);
    }
}

ResearchState Orchestrator::run_supervisor(const std::string& topic, int current_depth,
                                           int current_breadth, ResearchState state,
                                           const std::string& node) {
    state.current_topic = topic;
    state.current_depth = current_depth;
    state.current_breadth = current_breadth;

    bool can_split = false;
    if (current_depth > 0) {
        try {
            can_split = llm_.can_split_into_subtasks(topic);
        } catch (const Error& e) {
            log_event(node, "supervisor", "split_gate", std::string("error: ") + e.what());
            return state;  // subtree aborted, contributes nothing
        }
        log_event(node, "supervisor", "split_gate", can_split ? "yes" : "no");
    } else {
        log_event(node, "supervisor", "split_gate", "skipped (depth exhausted)");
    }

    if (can_split) {
        return run_independent(topic, current_depth, current_breadth, std::move(state), node);
    }

    bool unique = false;
    try {
        unique = llm_.is_different_research_topic(topic, state.past_topics);
    } catch (const Error& e) {
        log_event(node, "supervisor", "uniqueness_gate", std::string("error: ") + e.what());
        return state;
    }
    log_event(node, "supervisor", "uniqueness_gate", unique ? "unique" : "duplicate");
    if (!unique) {
        return state;  // topic already covered, skip the worker
    }
    return run_worker(topic, std::move(state), node);
}

ResearchState Orchestrator::run_independent(const std::string& topic, int current_depth,
                                            int current_breadth, ResearchState state,
                                            const std::string& node) {
    std::vector<std::string> sub_queries;
    try {
        sub_queries = llm_.decompose_topic(topic, current_breadth);
    } catch (const Error& e) {
        log_event(node, "independent", "decompose", std::string("error: ") + e.what());
        return state;
    }
    if (sub_queries.size() > static_cast<std::size_t>(current_breadth)) {
        log_event(node, "independent", "decompose",
                  "warning: over-length decomposition truncated to " +
                      std::to_string(current_breadth));
        sub_queries.resize(static_cast<std::size_t>(current_breadth));
    }

    if (sub_queries.empty()) {
        // Degenerate decomposition: research the parent topic itself.
        log_event(node, "independent", "decompose", "empty, falling back to worker");
        bool unique = false;
        try {
            unique = llm_.is_different_research_topic(topic, state.past_topics);
        } catch (const Error& e) {
            log_event(node, "independent", "uniqueness_gate", std::string("error: ") + e.what());
            return state;
        }
        log_event(node, "independent", "uniqueness_gate", unique ? "unique" : "duplicate");
        if (!unique) {
            return state;
        }
        return run_worker(topic, std::move(state), node);
    }

    const SubQueryPlan plan{topic, sub_queries};
    log_event(node, "independent", "decompose", "sub_queries=" + std::to_string(plan.sub_queries.size()));

    ResearchState merged = std::move(state);
    int child_index = 0;
    for (const auto& sub_query : plan.sub_queries) {
        ++child_index;
        const std::string child_node = node + "." + std::to_string(child_index);
        const ResearchState child_result =
            run_supervisor(sub_query, child_depth(current_depth), child_breadth(current_breadth),
                           merged, child_node);
        const ResearchState child_entries = new_entries_since(merged, child_result);
        merged = merge_child_state(std::move(merged), child_entries);
    }
    merged.current_topic = topic;
    merged.current_depth = current_depth;
    merged.current_breadth = current_breadth;
    return merged;
}

ResearchState Orchestrator::run_worker(const std::string& topic, ResearchState state,
                                       const std::string& node) {
    std::vector<SearchResult> filtered;
    std::string body;
    try {
        const std::vector<SearchResult> results = search_.search_web(topic, config_.search_top_k);
        filtered = filter_by_relevance(results, config_.relevance_threshold);
        log_event(node, "worker", "search",
                  "results=" + std::to_string(results.size()) +
                      " kept=" + std::to_string(filtered.size()));
        body = llm_.write_section(topic, filtered);
    } catch (const Error& e) {
        log_event(node, "worker", "research", std::string("error: ") + e.what());
        return state;  // nothing appended
    }

    SectionReport report;
    report.topic = topic;
    report.body = std::move(body);
    report.order_index = static_cast<int>(state.past_reports.size());
    report.level = config_.depth - state.current_depth;
    for (const auto& result : filtered) {
        report.citations.push_back(result.url);
    }

    // One atomic append: topic, report, citations together.
    state.past_topics.push_back(topic);
    state.past_citations.insert(state.past_citations.end(), report.citations.begin(),
                                report.citations.end());
    state.past_reports.push_back(std::move(report));
    log_event(node, "worker", "research",
              "ok order=" + std::to_string(state.past_reports.back().order_index));
    return state;
}

ReportDocument deep_research(const std::string& topic, const AgentConfig& config, LlmBackend& llm,
                             SearchClient& search, RunLog* log) {
    Orchestrator orchestrator(llm, search, config, log);
    const ResearchState root = new_root_state(topic, config);
    const ResearchState final_state =
        orchestrator.run_supervisor(topic, config.depth, config.breadth, root, "0");
    return assemble_report(final_state, topic);
}

} // namespace dra
