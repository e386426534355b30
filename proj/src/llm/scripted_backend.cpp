#include "dra/llm/scripted_backend.hpp"

#include "dra/errors.hpp"
#include "dra/util/hash.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

namespace dra {

void to_json(nlohmann::json& j, const ScriptedBehavior& behavior) {
    nlohmann::json uniqueness = nlohmann::json::array();
    for (const auto& [key, answer] : behavior.uniqueness_answers) {
        uniqueness.push_back({{"topic", key.first}, {"digest", key.second}, {"answer", answer}});
    }
    j = nlohmann::json{
        {"split_answers", behavior.split_answers},
        {"split_default", behavior.split_default},
        {"decompositions", behavior.decompositions},
        {"uniqueness_answers", uniqueness},
        {"section_bodies", behavior.section_bodies},
    };
}

void from_json(const nlohmann::json& j, ScriptedBehavior& behavior) {
    behavior = ScriptedBehavior{};
    if (j.contains("split_answers")) {
        j.at("split_answers").get_to(behavior.split_answers);
    }
    behavior.split_default = j.value("split_default", false);
    if (j.contains("decompositions")) {
        j.at("decompositions").get_to(behavior.decompositions);
    }
    if (j.contains("uniqueness_answers")) {
        for (const auto& entry : j.at("uniqueness_answers")) {
            const auto topic = entry.at("topic").get<std::string>();
            const auto digest = entry.value("digest", std::string{"*"});
            behavior.uniqueness_answers[{topic, digest}] = entry.at("answer").get<bool>();
        }
    }
    if (j.contains("section_bodies")) {
        j.at("section_bodies").get_to(behavior.section_bodies);
    }
}

ScriptedBehavior load_scripted_behavior(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw BackendError("scripted behavior file unreadable: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
        return doc.get<ScriptedBehavior>();
    } catch (const nlohmann::json::exception& e) {
        throw BackendError("scripted behavior file malformed: " + path.string() + ": " + e.what());
    }
}

ScriptedLlmBackend::ScriptedLlmBackend(ScriptedBehavior behavior)
    : behavior_(std::move(behavior)) {}

std::string ScriptedLlmBackend::default_section_body(const std::string& topic,
                                                     const std::vector<SearchResult>& evidence) {
    std::string body = "Key findings on " + topic + ":\n";
    for (const auto& result : evidence) {
        body += "- " + result.title + " (" + result.url + "): " + result.content + "\n";
    }
    return body;
}

std::string ScriptedLlmBackend::no_source_body(const std::string& topic) {
    return "No sources were found for this topic: " + topic;
}

bool ScriptedLlmBackend::do_can_split(const std::string& topic) {
    const auto it = behavior_.split_answers.find(topic);
    return it != behavior_.split_answers.end() ? it->second : behavior_.split_default;
}

std::vector<std::string> ScriptedLlmBackend::do_decompose(const std::string& topic,
                                                          int max_count) {
    const auto it = behavior_.decompositions.find(topic);
    if (it == behavior_.decompositions.end()) {
        return {};
    }
    std::vector<std::string> sub_queries = it->second;
    if (sub_queries.size() > static_cast<std::size_t>(max_count)) {
        sub_queries.resize(static_cast<std::size_t>(max_count));
    }
    return sub_queries;
}

bool ScriptedLlmBackend::do_is_different(const std::string& topic,
                                         const std::vector<std::string>& past_topics) {
    const std::string digest = topics_digest(past_topics);
    if (const auto it = behavior_.uniqueness_answers.find({topic, digest});
        it != behavior_.uniqueness_answers.end()) {
        return it->second;
    }
    if (const auto it = behavior_.uniqueness_answers.find({topic, "*"});
        it != behavior_.uniqueness_answers.end()) {
        return it->second;
    }
    return std::find(past_topics.begin(), past_topics.end(), topic) == past_topics.end();
}

std::string ScriptedLlmBackend::do_write_section(const std::string& topic,
                                                 const std::vector<SearchResult>& evidence) {
    if (const auto it = behavior_.section_bodies.find(topic); it != behavior_.section_bodies.end()) {
        return it->second;
    }
    if (evidence.empty()) {
        return no_source_body(topic);
    }
    return default_section_body(topic, evidence);
}

} // namespace dra
