#pragma once

#include "dra/agents/run_log.hpp"
#include "dra/core/model.hpp"
#include "dra/llm/backend.hpp"
#include "dra/report/report.hpp"
#include "dra/search/client.hpp"

#include <string>
#include <vector>

namespace dra {

/// One decomposition outcome: the parent topic and its sub-queries in
/// canonical (backend-returned) order. Never empty; an empty decomposition
/// falls back to the worker path instead of producing a plan.
struct SubQueryPlan {
    std::string parent_topic;
    std::vector<std::string> sub_queries;
};

/// Drives one research run over an LLM backend and a search client.
///
/// Execution is sequential depth-first, left-to-right; outputs are a pure
/// function of the backends' answers. A failed gate, decomposition, or
/// worker aborts only its own subtree: the error is logged and the subtree
/// contributes nothing.
class Orchestrator {
public:
    Orchestrator(LlmBackend& llm, SearchClient& search, AgentConfig config,
                 RunLog* log = nullptr);

    /// Decides the topic's path: decompose further (depth remaining and the
    /// split gate agrees), research directly (uniqueness gate agrees), or
    /// skip. Returns the state extended with the subtree's contributions.
    ResearchState run_supervisor(const std::string& topic, int current_depth,
                                 int current_breadth, ResearchState state,
                                 const std::string& node = "0");

    /// Decomposes the topic and spawns one child supervisor per sub-query,
    /// merging each child's contributions in canonical order.
    ResearchState run_independent(const std::string& topic, int current_depth,
                                  int current_breadth, ResearchState state,
                                  const std::string& node = "0");

    /// Leaf research: web search, relevance filtering, section synthesis.
    /// Appends the topic, its section report, and its citations atomically.
    ResearchState run_worker(const std::string& topic, ResearchState state,
                             const std::string& node = "0");

    const AgentConfig& config() const { return config_; }

private:
    void log_event(const std::string& node, std::string_view role, std::string_view action,
                   const std::string& outcome);

    LlmBackend& llm_;
    SearchClient& search_;
    AgentConfig config_;
    RunLog* log_;
};

/// Full pipeline: root state, supervisor recursion, report assembly.
/// Throws EmptyResearchError when the run produced zero sections and
/// ConfigError on an invalid config.
ReportDocument deep_research(const std::string& topic, const AgentConfig& config,
                             LlmBackend& llm, SearchClient& search, RunLog* log = nullptr);

} // namespace dra
