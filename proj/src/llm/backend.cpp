#include "dra/llm/backend.hpp"

#include <stdexcept>

namespace dra {

bool LlmBackend::can_split_into_subtasks(const std::string& topic) {
    if (topic.empty()) {
        throw std::invalid_argument("can_split_into_subtasks: topic must be non-empty");
    }
    split_calls_.fetch_add(1, std::memory_order_relaxed);
    return do_can_split(topic);
}

std::vector<std::string> LlmBackend::decompose_topic(const std::string& topic, int max_count) {
    if (max_count < 1) {
        throw std::invalid_argument("decompose_topic: max_count must be >= 1");
    }
    decompose_calls_.fetch_add(1, std::memory_order_relaxed);
    std::vector<std::string> sub_queries = do_decompose(topic, max_count);
    if (sub_queries.size() > static_cast<std::size_t>(max_count)) {
        sub_queries.resize(static_cast<std::size_t>(max_count));
    }
    return sub_queries;
}

bool LlmBackend::is_different_research_topic(const std::string& topic,
                                             const std::vector<std::string>& past_topics) {
    if (past_topics.empty()) {
        return true;  // vacuously distinct, no backend interaction needed
    }
    uniqueness_calls_.fetch_add(1, std::memory_order_relaxed);
    return do_is_different(topic, past_topics);
}

std::string LlmBackend::write_section(const std::string& topic,
                                      const std::vector<SearchResult>& evidence) {
    section_calls_.fetch_add(1, std::memory_order_relaxed);
    return do_write_section(topic, evidence);
}

LlmCallStats LlmBackend::stats() const {
    return LlmCallStats{
        split_calls_.load(std::memory_order_relaxed),
        decompose_calls_.load(std::memory_order_relaxed),
        uniqueness_calls_.load(std::memory_order_relaxed),
        section_calls_.load(std::memory_order_relaxed),
        retries_.load(std::memory_order_relaxed),
    };
}

void LlmBackend::note_retry() {
    retries_.fetch_add(1, std::memory_order_relaxed);
}

} // namespace dra
