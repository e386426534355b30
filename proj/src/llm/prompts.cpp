#include "dra/llm/prompts.hpp"

#include "dra/errors.hpp"

#include <fstream>
#include <sstream>

namespace dra {

namespace {

constexpr const char* kSplitGate = R"PROMPT(You are the planning stage of a hierarchical research engine. Decide whether
the research topic below can be decomposed into two or more independent
sub-topics that could be researched separately without depending on each
other's findings.

Research topic:
{topic}

Reply with ONLY a fenced json block of this exact shape:

```json
{"splittable": true}
```

Use true if the topic admits at least two independent sub-topics, false
otherwise. No other text.
)PROMPT";

constexpr const char* kDecomposeTopic = R"PROMPT(You are the planning stage of a hierarchical research engine. Break the
research topic below into independent sub-topics. Each sub-topic must be a
self-contained research instruction: specific, answerable on its own, and not
dependent on any sibling sub-topic.

Produce at most {max_count} sub-topics. If the topic naturally admits fewer,
produce fewer. Order them from most to least central.

Research topic:
{topic}

Reply with ONLY a fenced json block of this exact shape:

```json
{"sub_queries": ["first sub-topic", "second sub-topic"]}
```

No other text.
)PROMPT";

constexpr const char* kUniquenessGate = R"PROMPT(You are the deduplication stage of a hierarchical research engine. Decide
whether the candidate research topic below is semantically distinct from every
topic that has already been researched. Treat a paraphrase or a near-identical
reformulation of an earlier topic as NOT distinct.

Candidate topic:
{topic}

Already researched topics:
{past_topics}

Reply with ONLY a fenced json block of this exact shape:

```json
{"distinct": true}
```

Use true if the candidate covers meaningfully new ground, false otherwise.
No other text.
)PROMPT";

constexpr const char* kWriteSection = R"PROMPT(You are the writing stage of a hierarchical research engine. Write a focused,
well-organized markdown research section on the topic below, grounded strictly
in the web evidence provided.

Requirements:
- Use only the evidence below; do not invent facts or sources.
- Cite the url of the supporting evidence inline, in parentheses, next to each
  claim it supports.
- Use markdown lists and bold phrases where they aid readability. Do not add
  a top-level heading; the surrounding report supplies one.
- If the evidence list is empty, state explicitly that no sources were found
  for this topic and write nothing else.

Research topic:
{topic}

Evidence (JSON array of search results):
{evidence}
)PROMPT";

} // namespace

PromptLibrary PromptLibrary::builtin() {
    PromptLibrary lib;
    lib.templates_ = {
        {"split_gate", kSplitGate},
        {"decompose_topic", kDecomposeTopic},
        {"uniqueness_gate", kUniquenessGate},
        {"write_section", kWriteSection},
    };
    return lib;
}

PromptLibrary PromptLibrary::from_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError("prompt directory not found: " + dir.string());
    }
    PromptLibrary lib = builtin();
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") {
            continue;
        }
        std::ifstream in(entry.path());
        if (!in) {
            throw ConfigError("prompt file unreadable: " + entry.path().string());
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        lib.templates_[entry.path().stem().string()] = buffer.str();
    }
    return lib;
}

const std::string& PromptLibrary::text(const std::string& name) const {
    const auto it = templates_.find(name);
    if (it == templates_.end()) {
        throw ConfigError("unknown prompt template: " + name);
    }
    return it->second;
}

std::string PromptLibrary::render(const std::string& name,
                                  const std::map<std::string, std::string>& values) const {
    std::string out = text(name);
    for (const auto& [key, value] : values) {
        const std::string placeholder = "{" + key + "}";
        std::size_t pos = 0;
        while ((pos = out.find(placeholder, pos)) != std::string::npos) {
            out.replace(pos, placeholder.size(), value);
            pos += value.size();
        }
    }
    return out;
}

} // namespace dra
