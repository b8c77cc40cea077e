#include <vdw/prob_construct.hpp>
#include <vdw/bitstream.hpp>

#include <stdexcept>

namespace vdw
{
    namespace
    {
        using Wide = unsigned __int128;

        constexpr int max_k = 60;
    }

    auto random_domain_size(int k) -> Number
    {
        require_valid_k(k);
        if (k > max_k)
            throw std::invalid_argument("k too large");
        const Wide bound = Wide(k) << (k - 1);
        // largest n with 3 n^2 <= bound
        Wide lo = 0, hi = Wide(1) << 40;
        while (lo < hi) {
            Wide mid = (lo + hi + 1) / 2;
            if (3 * mid * mid <= bound)
                lo = mid;
            else
                hi = mid - 1;
        }
        return static_cast<Number>(lo);
    }

    auto construct_randomized(int k, std::uint64_t seed) -> ConstructResult
    {
        auto start = std::chrono::steady_clock::now();
        ConstructResult result;
        result.k = k;
        result.n = random_domain_size(k);
        result.seed = seed;

        BitStream stream{seed};
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(result.n));
        for (auto & b : bits)
            b = stream.next_bit();
        result.bits_consumed = stream.position();

        Coloring coloring{std::move(bits)};
        if (verify_proper(coloring, k).proper) {
            result.outcome = Outcome::proper;
            result.coloring = std::move(coloring);
        }
        else
            result.outcome = Outcome::failed;

        result.steps = 1;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    auto amplify(int k, std::uint64_t base_seed, int trials) -> ConstructResult
    {
        if (trials < 1)
            throw std::invalid_argument("amplify needs at least one trial");

        auto start = std::chrono::steady_clock::now();
        ConstructResult result;
        for (int i = 0 ; i < trials ; ++i) {
            result = construct_randomized(k, base_seed + static_cast<std::uint64_t>(i));
            result.steps = i + 1;
            if (result.proper())
                break;
        }
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }
}
