#pragma once

#include <mutex>
#include <ostream>
#include <string>
#include <string_view>

namespace dra {

/// Line-oriented run log: one line per agent event, shaped
/// `node=<id> role=<role> action=<action> outcome=<text>`.
/// Node ids are tree paths ("0", "0.1", "0.1.2"). The format is documented
/// but not byte-pinned.
class RunLog {
public:
    explicit RunLog(std::ostream& out) : out_(out) {}

    void event(const std::string& node, std::string_view role, std::string_view action,
               const std::string& outcome) {
        const std::lock_guard lock(mutex_);
        out_ << "node=" << node << " role=" << role << " action=" << action
             << " outcome=" << outcome << '\n';
    }

private:
    std::ostream& out_;
    std::mutex mutex_;
};

} // namespace dra
