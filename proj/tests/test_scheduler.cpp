#include "doctest.h"

#include "dra/core/scheduler.hpp"
#include "dra/errors.hpp"
#include "test_support.hpp"

#include <limits>
#include <vector>

using namespace dra;

TEST_CASE("child_depth decrements and refuses depth 0") {
    CHECK(child_depth(2) == 1);
    CHECK(child_depth(1) == 0);
    CHECK_THROWS_AS(child_depth(0), ContractViolation);
}

TEST_CASE("child_breadth subtracts two with a floor of one") {
    CHECK(child_breadth(5) == 3);
    CHECK(child_breadth(2) == 1);
    CHECK(child_breadth(1) == 1);
}

TEST_CASE("child_breadth is a fixpoint at one") {
    CHECK(child_breadth(child_breadth(1)) == 1);
}

TEST_CASE("effective_sub_topic_count takes the smaller of the two limits") {
    CHECK(effective_sub_topic_count(3, 5) == 3);
    CHECK(effective_sub_topic_count(7, 5) == 5);
    CHECK(effective_sub_topic_count(0, 5) == 0);
}

TEST_CASE("max_worker_topics matches the pinned examples") {
    SUBCASE("depth zero is a single worker regardless of breadth") {
        for (int b = 1; b <= 9; ++b) {
            const BudgetEstimate estimate = max_worker_topics(0, b);
            CHECK(estimate.max_worker_topics == 1);
            CHECK(estimate.per_level_caps.empty());
        }
    }
    SUBCASE("depth 2 breadth 5") {
        const BudgetEstimate estimate = max_worker_topics(2, 5);
        CHECK(estimate.per_level_caps == std::vector<int>{5, 3});
        CHECK(estimate.max_worker_topics == 15);
    }
    SUBCASE("depth 3 breadth 5 hits the breadth floor") {
        const BudgetEstimate estimate = max_worker_topics(3, 5);
        CHECK(estimate.per_level_caps == std::vector<int>{5, 3, 1});
        CHECK(estimate.max_worker_topics == 15);
    }
}

TEST_CASE("max_worker_topics equals the product of its own per-level caps") {
    for (int d = 0; d <= 5; ++d) {
        for (int b = 1; b <= 10; ++b) {
            const BudgetEstimate estimate = max_worker_topics(d, b);
            std::int64_t product = 1;
            for (const int cap : estimate.per_level_caps) {
                product *= cap;
            }
            CHECK(estimate.max_worker_topics == product);
        }
    }
}

TEST_CASE("max_worker_topics agrees with a brute-force full expansion") {
    for (int d = 0; d <= 4; ++d) {
        for (int b = 1; b <= 8; ++b) {
            CAPTURE(d);
            CAPTURE(b);
            CHECK(max_worker_topics(d, b).max_worker_topics ==
                  dra::test::full_expansion_leaf_count(d, b));
        }
    }
}

TEST_CASE("max_worker_topics is non-decreasing in depth and breadth") {
    for (int d = 1; d <= 5; ++d) {
        for (int b = 1; b <= 10; ++b) {
            const std::int64_t here = max_worker_topics(d, b).max_worker_topics;
            CHECK(here >= max_worker_topics(d - 1, b).max_worker_topics);
            if (b > 1) {
                CHECK(here >= max_worker_topics(d, b - 1).max_worker_topics);
            }
        }
    }
}

TEST_CASE("max_worker_topics saturates instead of overflowing") {
    const BudgetEstimate estimate = max_worker_topics(1000, 1000000);
    CHECK(estimate.max_worker_topics == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("max_tree_nodes counts every level of the full expansion") {
    // depth 0: just the root.
    CHECK(max_tree_nodes(0, 5) == 1);
    // depth 2 breadth 5: 1 + 5 + 15.
    CHECK(max_tree_nodes(2, 5) == 21);
    // depth 1 breadth 2: 1 + 2.
    CHECK(max_tree_nodes(1, 2) == 3);
}

TEST_CASE("max_tree_nodes dominates the worker bound") {
    for (int d = 0; d <= 4; ++d) {
        for (int b = 1; b <= 8; ++b) {
            CHECK(max_tree_nodes(d, b) >= max_worker_topics(d, b).max_worker_topics);
        }
    }
}
