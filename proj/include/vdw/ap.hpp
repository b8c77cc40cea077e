#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdw
{
    using Number = std::int64_t;

    /// The k-term arithmetic progression {a, a+d, ..., a+(k-1)d}. Numbers are
    /// 1-indexed throughout, so a >= 1. Ordering is lexicographic by (a, d);
    /// k is compared last and is expected to agree between operands.
    struct Kap
    {
        Number a = 1;
        Number d = 1;
        int k = 3;

        [[nodiscard]] constexpr auto at(int i) const -> Number { return a + i * d; }
        [[nodiscard]] constexpr auto last() const -> Number { return a + (k - 1) * d; }
        [[nodiscard]] constexpr auto fits(Number n) const -> bool { return a >= 1 && d >= 1 && last() <= n; }

        [[nodiscard]] constexpr auto contains(Number x) const -> bool
        {
            if (x < a || x > last())
                return false;
            return (x - a) % d == 0;
        }

        [[nodiscard]] auto intersects(const Kap & other) const -> bool;

        friend constexpr auto operator<=>(const Kap &, const Kap &) = default;
    };

    auto operator<< (std::ostream &, const Kap &) -> std::ostream &;

    /// A total 2-coloring of [n]. Storage is 0-based; color(x) takes the
    /// 1-indexed number.
    class Coloring
    {
        public:
            Coloring() = default;
            explicit Coloring(Number n, std::uint8_t fill = 0);
            explicit Coloring(std::vector<std::uint8_t> bits);

            /// From a string of '0'/'1' characters; throws std::invalid_argument otherwise.
            static auto from_string(std::string_view bits) -> Coloring;

            [[nodiscard]] auto n() const -> Number { return static_cast<Number>(_bits.size()); }
            [[nodiscard]] auto color(Number x) const -> std::uint8_t { return _bits[static_cast<std::size_t>(x - 1)]; }
            auto set(Number x, std::uint8_t c) -> void { _bits[static_cast<std::size_t>(x - 1)] = c; }
            [[nodiscard]] auto bits() const -> std::span<const std::uint8_t> { return _bits; }

            /// Restriction to [m], m <= n.
            [[nodiscard]] auto prefix(Number m) const -> Coloring;

            [[nodiscard]] auto to_string() const -> std::string;

            friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

        private:
            std::vector<std::uint8_t> _bits;
    };

    struct VerifyReport
    {
        bool proper = true;
        std::optional<Kap> witness;
        std::int64_t aps_checked = 0;
    };

    auto require_valid_k(int k) -> void;

    /// All k-APs inside [n] in (a, d) order.
    [[nodiscard]] auto enumerate_kaps(Number n, int k) -> std::vector<Kap>;

    /// Exact number of k-APs inside [n]: sum over d of (n - (k-1)d).
    [[nodiscard]] auto count_kaps(Number n, int k) -> std::int64_t;

    /// Calls fn(Kap) for every k-AP of [n] containing x, grouped by position
    /// of x inside the progression; order is unspecified and each AP is seen once.
    template <typename Fn>
    auto for_each_kap_through(Number x, Number n, int k, Fn && fn) -> void
    {
        for (int j = 0 ; j < k ; ++j) {
            // x = a + j d, with a >= 1 and a + (k-1) d <= n
            for (Number d = 1 ; ; ++d) {
                Number a = x - j * d;
                if (a < 1 || a + (k - 1) * d > n)
                    break;
                fn(Kap{a, d, k});
            }
        }
    }

    /// All k-APs of [n] sharing a number with ap, ap included, in (a, d) order.
    [[nodiscard]] auto intersecting_kaps(const Kap & ap, Number n) -> std::vector<Kap>;

    [[nodiscard]] auto is_monochromatic(const Coloring & coloring, const Kap & ap) -> bool;

    [[nodiscard]] auto first_mono_kap(const Coloring & coloring, int k) -> std::optional<Kap>;

    [[nodiscard]] auto count_mono_kaps(const Coloring & coloring, int k) -> std::int64_t;

    [[nodiscard]] auto verify_proper(const Coloring & coloring, int k) -> VerifyReport;

    /// Text format: "vdw-coloring v1 k=<k> n=<n>\n" followed by n '0'/'1'
    /// characters and a newline.
    [[nodiscard]] auto format_coloring(const Coloring & coloring, int k) -> std::string;

    struct ParsedColoring
    {
        int k = 0;
        Coloring coloring;
    };

    /// Throws vdw::Error(parse_error) on malformed input.
    [[nodiscard]] auto parse_coloring(std::string_view text) -> ParsedColoring;
}
