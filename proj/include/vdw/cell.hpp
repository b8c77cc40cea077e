#pragma once

#include <cstdint>

namespace vdw
{
    /// A color that may still be undecided; `half` stands for a fair coin.
    enum class Cell : std::uint8_t
    {
        zero = 0,
        one = 1,
        half = 2
    };
}
