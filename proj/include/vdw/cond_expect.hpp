#pragma once

#include <vdw/ap.hpp>
#include <vdw/cell.hpp>
#include <vdw/dyadic.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace vdw
{
    /// Cell i-1 is the color of number i; `half` means not yet colored.
    using PartialAssignment = std::vector<Cell>;

    /// Expected number of monochromatic k-APs of [n] when each number is
    /// colored 1 independently with probability given by its cell, n being
    /// the assignment length. Exact.
    [[nodiscard]] auto potential(const PartialAssignment & assignment, int k) -> Dyadic;

    /// Largest n with n^2 < k 2^(k-1).
    [[nodiscard]] auto derandomized_domain_size(int k) -> Number;

    /// Called after each position is fixed with (position, potential before,
    /// potential after).
    using DescentObserver = std::function<void (Number, const Dyadic &, const Dyadic &)>;

    /// Colors [derandomized_domain_size(k)] greedily, fixing positions 1..n in
    /// order to whichever color gives the smaller conditional expectation
    /// (ties go to 0). Throws std::logic_error if the potential ever rises or
    /// the result does not verify.
    [[nodiscard]] auto construct_derandomized(int k, const DescentObserver & observer = {}) -> Coloring;

    /// Same procedure on an arbitrary n; the final coloring is proper only if
    /// the starting potential is below 1.
    [[nodiscard]] auto derandomize(Number n, int k, const DescentObserver & observer = {}) -> Coloring;
}
