#pragma once

#include <vdw/ap.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace vdw
{
    enum class Outcome
    {
        proper,
        failed
    };

    /// Result of a randomized construction. A proper outcome always carries a
    /// coloring that has been re-verified before being returned.
    struct ConstructResult
    {
        Outcome outcome = Outcome::failed;
        std::optional<Coloring> coloring;
        int k = 0;
        Number n = 0;
        std::uint64_t seed = 0;
        std::uint64_t bits_consumed = 0;
        /// trials for amplify, recolorings for stage-3 style runs
        std::int64_t steps = 0;
        std::chrono::nanoseconds elapsed{0};

        [[nodiscard]] auto proper() const -> bool { return outcome == Outcome::proper; }

        /// Equality on everything except timing.
        [[nodiscard]] auto same_run(const ConstructResult & other) const -> bool
        {
            return outcome == other.outcome && coloring == other.coloring && k == other.k && n == other.n
                && seed == other.seed && bits_consumed == other.bits_consumed && steps == other.steps;
        }
    };

    /// Largest n with 3 n^2 <= k 2^(k-1), i.e. the floor of sqrt(k/3) 2^((k-1)/2).
    [[nodiscard]] auto random_domain_size(int k) -> Number;

    /// Colors [n] with n fresh bits and keeps the coloring only if it has no
    /// monochromatic k-AP.
    [[nodiscard]] auto construct_randomized(int k, std::uint64_t seed) -> ConstructResult;

    /// Repeats construct_randomized with seeds base_seed, base_seed+1, ... and
    /// returns the first proper result, or the last failure.
    [[nodiscard]] auto amplify(int k, std::uint64_t base_seed, int trials) -> ConstructResult;
}
