#pragma once

#include "dra/core/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dra {

/// The final research artifact.
struct ReportDocument {
    std::string root_topic;
    std::vector<std::string> toc;          // toc[i] == sections[i].topic
    std::vector<SectionReport> sections;   // ascending order_index
    std::vector<std::string> citations;    // unique, first-occurrence order

    bool operator==(const ReportDocument&) const = default;
};

/// Orders sections by order_index, derives the table of contents, and
/// deduplicates citations keeping first occurrence. Throws
/// EmptyResearchError when the state holds no section reports.
ReportDocument assemble_report(const ResearchState& state, const std::string& root_topic);

/// Renders the document as UTF-8 markdown with LF line endings: title line,
/// numbered table of contents, one heading per section at depth 2 + level
/// (capped at 6) followed by its body, then a bulleted citation list.
/// Byte-deterministic for a given document.
std::string render_markdown(const ReportDocument& doc);

/// Writes render_markdown(doc) to `path`, appending a .md extension when
/// missing. Writes a temporary file first and renames it into place, so the
/// target is never left partially written. Throws IoError naming the path.
void save_report(const ReportDocument& doc, std::filesystem::path path);

} // namespace dra
