#include "dra/core/scheduler.hpp"

#include "dra/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dra {

namespace {

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        return std::numeric_limits<std::int64_t>::max();
    }
    return out;
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return std::numeric_limits<std::int64_t>::max();
    }
    return out;
}

} // namespace

int child_depth(int current_depth) {
    if (current_depth < 1) {
        throw ContractViolation("child_depth called at depth " + std::to_string(current_depth));
    }
    return current_depth - 1;
}

int child_breadth(int current_breadth) {
    return std::max(current_breadth - 2, 1);
}

int effective_sub_topic_count(int st_max, int current_breadth) {
    return std::min(st_max, current_breadth);
}

BudgetEstimate max_worker_topics(int depth, int breadth) {
    BudgetEstimate estimate;
    for (int level = 0; level < depth; ++level) {
        const int cap = std::max(breadth - 2 * level, 1);
        estimate.per_level_caps.push_back(cap);
        estimate.max_worker_topics = saturating_mul(estimate.max_worker_topics, cap);
    }
    return estimate;
}

std::int64_t max_tree_nodes(int depth, int breadth) {
    std::int64_t total = 0;
    std::int64_t level_width = 1;
    for (int level = 0; level <= depth; ++level) {
        total = saturating_add(total, level_width);
        if (level < depth) {
            level_width = saturating_mul(level_width, std::max(breadth - 2 * level, 1));
        }
    }
    return total;
}

} // namespace dra
