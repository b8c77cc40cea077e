#pragma once

#include <array>
#include <cstdint>

namespace vdw
{
    /// Deterministic, platform-independent bit source.
    ///
    /// The generator is xoshiro256** (Blackman and Vigna) with its 256-bit
    /// state filled from the 64-bit seed by four successive SplitMix64
    /// outputs. Each 64-bit output word is consumed least-significant bit
    /// first. Only fixed-width unsigned arithmetic is involved, so a given
    /// seed yields the same bit sequence on every platform.
    class BitStream
    {
        public:
            explicit BitStream(std::uint64_t seed);

            auto next_bit() -> std::uint8_t;

            /// Next full 64-bit generator output; advances position by 64.
            auto next_word() -> std::uint64_t;

            [[nodiscard]] auto seed() const -> std::uint64_t { return _seed; }
            [[nodiscard]] auto position() const -> std::uint64_t { return _position; }

        private:
            std::uint64_t _seed;
            std::uint64_t _position = 0;
            std::array<std::uint64_t, 4> _state{};
            std::uint64_t _word = 0;
            int _bits_left = 0;

            auto step() -> std::uint64_t;
    };

    /// SplitMix64 finalizer; used for seeding and for deriving sub-seeds.
    [[nodiscard]] auto splitmix64(std::uint64_t & state) -> std::uint64_t;

    /// Stable sub-seed for stream `index` under `seed`.
    [[nodiscard]] auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;
}
