#pragma once

#include <cstdint>
#include <vector>

namespace dra {

/// Worst-case worker-call budget for one run.
struct BudgetEstimate {
    std::int64_t max_worker_topics = 1;  // product of per_level_caps; empty product = 1
    std::vector<int> per_level_caps;     // fan-out cap at each level below the root
};

/// Depth handed to a spawned child supervisor. Calling at depth 0 is a
/// contract violation: a supervisor never descends once depth is exhausted.
int child_depth(int current_depth);

/// Breadth handed to a spawned child supervisor: current_breadth - 2,
/// floored at 1.
int child_breadth(int current_breadth);

/// Fan-out actually available to a decomposition: the smaller of the topic's
/// intrinsic sub-topic limit and the current breadth.
int effective_sub_topic_count(int st_max, int current_breadth);

/// Closed-form upper bound on the number of topics reaching a worker,
/// together with the per-level fan-out caps it multiplies. Saturates at
/// INT64_MAX for absurdly large inputs rather than overflowing.
BudgetEstimate max_worker_topics(int depth, int breadth);

/// Total node count of a fully expanded decomposition tree (all levels,
/// root included). Loose upper bound on calls to either LLM gate.
std::int64_t max_tree_nodes(int depth, int breadth);

} // namespace dra
