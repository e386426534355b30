#pragma once

#include "dra/llm/backend.hpp"
#include "json.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dra {

/// Answer tables for the deterministic test backend. Every lookup has a
/// defined default, so any topic is reachable in a scripted run:
///   - split:      split_answers[topic], else split_default (false)
///   - decompose:  decompositions[topic], else {} (unsplittable)
///   - uniqueness: uniqueness_answers[(topic, digest)], then
///                 [(topic, "*")], else literal string inequality against
///                 the past topics
///   - section:    section_bodies[topic], else a body synthesized from the
///                 evidence (or an explicit no-source statement)
struct ScriptedBehavior {
    std::map<std::string, bool> split_answers;
    bool split_default = false;
    std::map<std::string, std::vector<std::string>> decompositions;
    std::map<std::pair<std::string, std::string>, bool> uniqueness_answers;
    std::map<std::string, std::string> section_bodies;
};

void to_json(nlohmann::json& j, const ScriptedBehavior& behavior);
void from_json(const nlohmann::json& j, ScriptedBehavior& behavior);

/// Reads a ScriptedBehavior JSON document. Throws BackendError when the file
/// is missing or malformed.
ScriptedBehavior load_scripted_behavior(const std::filesystem::path& path);

/// Pure-lookup LLM backend: a function of (ScriptedBehavior, inputs) only.
/// Immutable after construction, safe to share across threads.
class ScriptedLlmBackend : public LlmBackend {
public:
    explicit ScriptedLlmBackend(ScriptedBehavior behavior);

    const ScriptedBehavior& behavior() const { return behavior_; }

    /// Fallback body used when no section is scripted and evidence exists.
    static std::string default_section_body(const std::string& topic,
                                            const std::vector<SearchResult>& evidence);

    /// Body returned for an empty evidence set when no section is scripted.
    static std::string no_source_body(const std::string& topic);

protected:
    bool do_can_split(const std::string& topic) override;
    std::vector<std::string> do_decompose(const std::string& topic, int max_count) override;
    bool do_is_different(const std::string& topic,
                         const std::vector<std::string>& past_topics) override;
    std::string do_write_section(const std::string& topic,
                                 const std::vector<SearchResult>& evidence) override;

private:
    const ScriptedBehavior behavior_;
};

} // namespace dra
