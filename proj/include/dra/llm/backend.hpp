#pragma once

#include "dra/search/result.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace dra {

/// Retry and timeout policy for one LLM backend. Retries apply only to
/// transport errors and malformed outputs, never to well-formed negative
/// answers.
struct LlmRequestPolicy {
    int max_retries = 2;
    std::chrono::milliseconds timeout = std::chrono::seconds(60);
    std::string model_id;
};

/// Per-kind call counters. A "call" is one logical interaction; retries are
/// counted separately on top of the first attempt.
struct LlmCallStats {
    std::int64_t split_calls = 0;
    std::int64_t decompose_calls = 0;
    std::int64_t uniqueness_calls = 0;
    std::int64_t section_calls = 0;
    std::int64_t retries = 0;

    std::int64_t total_calls() const {
        return split_calls + decompose_calls + uniqueness_calls + section_calls;
    }
};

/// The four LLM interaction contracts the agents depend on. Implementations
/// must be safely callable from concurrent subtree executions.
class LlmBackend {
public:
    virtual ~LlmBackend() = default;

    /// True iff the topic can be decomposed into two or more independent
    /// sub-topics.
    bool can_split_into_subtasks(const std::string& topic);

    /// Between 0 and max_count self-contained sub-queries, in the order the
    /// backend produced them. Longer backend answers are truncated.
    std::vector<std::string> decompose_topic(const std::string& topic, int max_count);

    /// True iff the topic is semantically distinct from every past topic.
    /// An empty past list short-circuits to true without a backend call.
    bool is_different_research_topic(const std::string& topic,
                                     const std::vector<std::string>& past_topics);

    /// A markdown section grounded in the evidence. With empty evidence the
    /// section must state explicitly that no sources were found.
    std::string write_section(const std::string& topic,
                              const std::vector<SearchResult>& evidence);

    LlmCallStats stats() const;

protected:
    virtual bool do_can_split(const std::string& topic) = 0;
    virtual std::vector<std::string> do_decompose(const std::string& topic, int max_count) = 0;
    virtual bool do_is_different(const std::string& topic,
                                 const std::vector<std::string>& past_topics) = 0;
    virtual std::string do_write_section(const std::string& topic,
                                         const std::vector<SearchResult>& evidence) = 0;

    void note_retry();

private:
    std::atomic<std::int64_t> split_calls_{0};
    std::atomic<std::int64_t> decompose_calls_{0};
    std::atomic<std::int64_t> uniqueness_calls_{0};
    std::atomic<std::int64_t> section_calls_{0};
    std::atomic<std::int64_t> retries_{0};
};

} // namespace dra
