#pragma once

#include <vdw/ap.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace vdw
{
    struct SearchStats
    {
        std::int64_t nodes_expanded = 0;
        std::int64_t max_depth_reached = 0;
        std::chrono::nanoseconds elapsed{0};
    };

    constexpr std::int64_t default_node_budget = 1'000'000'000;

    struct SearchResult
    {
        std::optional<Coloring> coloring;
        SearchStats stats;
    };

    /// Depth-first search for a proper coloring of [n] with color(1) = 0,
    /// trying 0 before 1 at each position and pruning as soon as an AP ending
    /// at the newest position is monochromatic. Throws
    /// vdw::Error(budget_exceeded) when node_budget expansions do not settle it.
    [[nodiscard]] auto exists_proper(Number n, int k, std::int64_t node_budget = default_node_budget) -> SearchResult;

    /// W(k, 2) for k in {3, 4}: one more than the longest proper coloring found
    /// by a single exhaustive search bounded by n_max. Throws
    /// vdw::Error(not_resolved) if [n_max] itself admits a proper coloring.
    [[nodiscard]] auto exact_w(int k, Number n_max = 64, SearchStats * stats = nullptr,
            std::int64_t node_budget = default_node_budget) -> Number;
}
