#include <vdw/bitstream.hpp>

namespace vdw
{
    namespace
    {
        constexpr auto rotl(std::uint64_t x, int k) -> std::uint64_t
        {
            return (x << k) | (x >> (64 - k));
        }
    }

    auto splitmix64(std::uint64_t & state) -> std::uint64_t
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        std::uint64_t state = seed ^ 0x6a09e667f3bcc909ULL;
        std::uint64_t mixed = splitmix64(state);
        state = mixed ^ index;
        return splitmix64(state);
    }

    BitStream::BitStream(std::uint64_t seed) :
        _seed(seed)
    {
        std::uint64_t sm = seed;
        for (auto & s : _state)
            s = splitmix64(sm);
    }

    auto BitStream::step() -> std::uint64_t
    {
        const std::uint64_t result = rotl(_state[1] * 5, 7) * 9;
        const std::uint64_t t = _state[1] << 17;
        _state[2] ^= _state[0];
        _state[3] ^= _state[1];
        _state[1] ^= _state[2];
        _state[0] ^= _state[3];
        _state[2] ^= t;
        _state[3] = rotl(_state[3], 45);
        return result;
    }

    auto BitStream::next_bit() -> std::uint8_t
    {
        if (_bits_left == 0) {
            _word = step();
            _bits_left = 64;
        }
        auto bit = static_cast<std::uint8_t>(_word & 1);
        _word >>= 1;
        --_bits_left;
        ++_position;
        return bit;
    }

    auto BitStream::next_word() -> std::uint64_t
    {
        std::uint64_t w = 0;
        for (int i = 0 ; i < 64 ; ++i)
            w |= std::uint64_t{next_bit()} << i;
        return w;
    }
}
