#pragma once

#include <vdw/ap.hpp>
#include <vdw/prob_construct.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vdw
{
    /// One FIX call: the AP it was called on and that AP's color just before
    /// it was recolored.
    struct FixNode
    {
        Kap ap;
        std::uint8_t prior_color = 0;
        std::optional<std::size_t> parent;
        std::vector<std::size_t> children;

        friend auto operator==(const FixNode &, const FixNode &) -> bool = default;
    };

    /// Forest of FIX calls. Nodes are stored in call order, which is also a
    /// pre-order traversal of the forest.
    struct FixForest
    {
        std::vector<FixNode> nodes;
        std::vector<std::size_t> roots;

        [[nodiscard]] auto total_calls() const -> std::int64_t { return static_cast<std::int64_t>(nodes.size()); }

        /// One line per root, each node written as "(a,d,prior_color [children])".
        [[nodiscard]] auto dump() const -> std::string;

        friend auto operator==(const FixForest &, const FixForest &) -> bool = default;
    };

    struct MoserResult
    {
        Outcome outcome = Outcome::failed;
        std::optional<Coloring> coloring;
        FixForest forest;
        /// every random bit consumed, initial coloring first, then k per call
        std::vector<std::uint8_t> bits;
        int k = 0;
        Number n = 0;
        std::uint64_t seed = 0;
        std::chrono::nanoseconds elapsed{0};

        [[nodiscard]] auto proper() const -> bool { return outcome == Outcome::proper; }
    };

    struct MoserOptions
    {
        /// Assert the FIX postcondition (no AP that was not monochromatic before
        /// a call is monochromatic after it) and the MAIN loop invariant. Costs
        /// a full AP scan per call; meant for small n.
        bool check_claims = false;
        /// Overrides the default call budget.
        std::optional<std::int64_t> budget;
    };

    /// floor(2^(k-1) / (4k))
    [[nodiscard]] auto moser_domain_size(int k) -> Number;

    /// ceil(n^2 / k) + 100 FIX calls
    [[nodiscard]] auto moser_budget(Number n, int k) -> std::int64_t;

    /// Moser's resampling algorithm on [moser_domain_size(k)]. For k < 10 the
    /// domain is shorter than k and the all-zeros coloring of [max(n, 1)] is
    /// returned without drawing bits.
    [[nodiscard]] auto construct_moser(int k, std::uint64_t seed, const MoserOptions & options = {}) -> MoserResult;

    /// The same algorithm on an explicit domain, reading its random bits from
    /// `bits`; running out of bits counts as failure.
    [[nodiscard]] auto run_moser_on_bits(Number n, int k, std::span<const std::uint8_t> bits, const MoserOptions & options = {}) -> MoserResult;

    /// Reconstructs the consumed bit string from the forest and the final
    /// coloring: symbolic replay of the writes, then each call pins the
    /// symbols under its AP to its prior color, and the final coloring pins
    /// whatever was never overwritten. The result is replayed through the
    /// algorithm and must reproduce the forest and final coloring exactly;
    /// otherwise vdw::Error(inconsistent_trace) is thrown.
    [[nodiscard]] auto recover_bits(Number n, int k, const FixForest & forest, const Coloring & final) -> std::vector<std::uint8_t>;
}
