#include <vdw/cond_expect.hpp>

#include <stdexcept>

namespace vdw
{
    namespace
    {
        constexpr int max_k = 40;

        // Contribution of one AP given `unfixed` uncolored members and the
        // state of its colored ones.
        enum class Fixed : std::uint8_t
        {
            none,
            all_zero,
            all_one,
            mixed
        };

        auto with_color(Fixed f, std::uint8_t c) -> Fixed
        {
            Fixed mine = c ? Fixed::all_one : Fixed::all_zero;
            if (f == Fixed::none || f == mine)
                return mine;
            return Fixed::mixed;
        }

        // Numerator over 2^(k-1): 1 when nothing is fixed (2 * 2^-k),
        // 2^(k-1-unfixed) when the fixed members agree, 0 otherwise.
        auto contribution(Fixed f, int unfixed, int k) -> std::uint64_t
        {
            switch (f) {
                case Fixed::none: return 1;
                case Fixed::mixed: return 0;
                default: return std::uint64_t{1} << (k - 1 - unfixed);
            }
        }
    }

    auto potential(const PartialAssignment & assignment, int k) -> Dyadic
    {
        require_valid_k(k);
        if (k > max_k)
            throw std::invalid_argument("k too large");
        const auto n = static_cast<Number>(assignment.size());

        Dyadic::Mantissa total = 0;
        for (Number d = 1 ; (k - 1) * d < n ; ++d)
            for (Number a = 1 ; a + (k - 1) * d <= n ; ++a) {
                Fixed f = Fixed::none;
                int unfixed = 0;
                for (int i = 0 ; i < k && f != Fixed::mixed ; ++i) {
                    auto cell = assignment[static_cast<std::size_t>(a - 1 + i * d)];
                    if (cell == Cell::half)
                        ++unfixed;
                    else
                        f = with_color(f, static_cast<std::uint8_t>(cell));
                }
                total += contribution(f, unfixed, k);
            }
        return Dyadic::ratio(total, k - 1);
    }

    auto derandomized_domain_size(int k) -> Number
    {
        require_valid_k(k);
        if (k > max_k)
            throw std::invalid_argument("k too large");
        using Wide = unsigned __int128;
        const Wide bound = Wide(k) << (k - 1);
        Wide lo = 0, hi = Wide(1) << 40;
        while (lo < hi) {
            Wide mid = (lo + hi + 1) / 2;
            if (mid * mid < bound)
                lo = mid;
            else
                hi = mid - 1;
        }
        return static_cast<Number>(lo);
    }

    auto derandomize(Number n, int k, const DescentObserver & observer) -> Coloring
    {
        require_valid_k(k);
        if (k > max_k)
            throw std::invalid_argument("k too large");
        if (n < 0)
            throw std::invalid_argument("n must be non-negative");

        // Per-AP state, indexed by d-major offset: index(a, d) = offset[d] + a - 1.
        std::vector<std::size_t> offset{0, 0};
        for (Number d = 1 ; (k - 1) * d < n ; ++d)
            offset.push_back(offset.back() + static_cast<std::size_t>(n - (k - 1) * d));
        const std::size_t aps = offset.back();
        std::vector<Fixed> fixed(aps, Fixed::none);
        std::vector<std::uint8_t> unfixed(aps, static_cast<std::uint8_t>(k));

        // f * 2^(k-1); every AP starts at numerator 1
        Dyadic::Mantissa current = aps;

        std::vector<std::uint8_t> colors(static_cast<std::size_t>(n), 0);
        std::vector<std::size_t> through;
        for (Number x = 1 ; x <= n ; ++x) {
            through.clear();
            for_each_kap_through(x, n, k, [&] (const Kap & ap) {
                through.push_back(offset[static_cast<std::size_t>(ap.d)] + static_cast<std::size_t>(ap.a - 1));
            });

            // f(.., z, ..) = current + sum of per-AP deltas at z
            Dyadic::Mantissa with[2] = {current, current};
            for (auto idx : through) {
                const auto before = contribution(fixed[idx], unfixed[idx], k);
                for (std::uint8_t c = 0 ; c < 2 ; ++c)
                    with[c] = with[c] - before + contribution(with_color(fixed[idx], c), unfixed[idx] - 1, k);
            }

            const std::uint8_t choice = with[1] < with[0] ? 1 : 0;
            if (with[choice] > current)
                throw std::logic_error("conditional expectation increased");
            for (auto idx : through) {
                fixed[idx] = with_color(fixed[idx], choice);
                --unfixed[idx];
            }
            colors[static_cast<std::size_t>(x - 1)] = choice;

            if (observer)
                observer(x, Dyadic::ratio(current, k - 1), Dyadic::ratio(with[choice], k - 1));
            current = with[choice];
        }

        return Coloring{std::move(colors)};
    }

    auto construct_derandomized(int k, const DescentObserver & observer) -> Coloring
    {
        const Number n = derandomized_domain_size(k);
        Coloring coloring = derandomize(n, k, observer);
        if (! verify_proper(coloring, k).proper)
            throw std::logic_error("derandomized coloring failed verification");
        return coloring;
    }
}
