#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace dra {

/// Named prompt templates with {placeholder} substitution. The artifact
/// ships the same texts twice: compiled-in defaults and the editable files
/// under prompts/; a test keeps the two in sync.
class PromptLibrary {
public:
    /// Compiled-in copies of the shipped templates.
    static PromptLibrary builtin();

    /// Loads every *.txt file in `dir` (name = filename stem) on top of the
    /// builtin set. Throws ConfigError when the directory is unreadable.
    static PromptLibrary from_dir(const std::filesystem::path& dir);

    /// Template text by name. Throws ConfigError for an unknown name.
    const std::string& text(const std::string& name) const;

    /// Renders `name` with every "{key}" replaced by its value.
    std::string render(const std::string& name,
                       const std::map<std::string, std::string>& values) const;

    const std::map<std::string, std::string>& all() const { return templates_; }

private:
    std::map<std::string, std::string> templates_;
};

} // namespace dra
