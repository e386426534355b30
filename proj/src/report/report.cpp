#include "dra/report/report.hpp"

#include "dra/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_set>
#include <utility>

namespace dra {

ReportDocument assemble_report(const ResearchState& state, const std::string& root_topic) {
    if (state.past_reports.empty()) {
        throw EmptyResearchError("research run produced no sections for topic \"" + root_topic +
                                 "\"");
    }
    ReportDocument doc;
    doc.root_topic = root_topic;
    doc.sections = state.past_reports;
    std::stable_sort(doc.sections.begin(), doc.sections.end(),
                     [](const SectionReport& a, const SectionReport& b) {
                         return a.order_index < b.order_index;
                     });

    doc.toc.reserve(doc.sections.size());
    std::unordered_set<std::string> seen;
    for (const auto& section : doc.sections) {
        doc.toc.push_back(section.topic);
        for (const auto& url : section.citations) {
            if (seen.insert(url).second) {
                doc.citations.push_back(url);
            }
        }
    }
    return doc;
}

namespace {

// Body text with trailing newlines normalized away; the renderer supplies
// the blank line that follows.
std::string trimmed_body(const std::string& body) {
    const auto end = body.find_last_not_of("\r\n");
    if (end == std::string::npos) {
        return {};
    }
    return body.substr(0, end + 1);
}

} // namespace

std::string render_markdown(const ReportDocument& doc) {
    std::string out;
    out += "# " + doc.root_topic + "\n\n";

    out += "## Table of Contents\n\n";
    for (std::size_t i = 0; i < doc.toc.size(); ++i) {
        out += std::to_string(i + 1) + ". " + doc.toc[i] + "\n";
    }
    out += "\n## Report\n\n";

    for (const auto& section : doc.sections) {
        const int heading_depth = std::min(2 + section.level, 6);
        out.append(static_cast<std::size_t>(heading_depth), '#');
        out += " " + section.topic + "\n\n";
        const std::string body = trimmed_body(section.body);
        if (!body.empty()) {
            out += body + "\n\n";
        }
    }

    out += "## Citations\n";
    for (const auto& url : doc.citations) {
        out += "- " + url + "\n";
    }
    return out;
}

void save_report(const ReportDocument& doc, std::filesystem::path path) {
    if (path.extension() != ".md") {
        path += ".md";
    }
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory for " + path.string() + ": " + ec.message());
        }
    }

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << render_markdown(doc);
        out.flush();
        if (!out) {
            std::remove(tmp.string().c_str());
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.string().c_str());
        throw IoError("cannot move report into place at " + path.string() + ": " + ec.message());
    }
}

} // namespace dra
