#include <vdw/ap.hpp>
#include <vdw/error.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace vdw
{
    auto Kap::intersects(const Kap & other) const -> bool
    {
        for (int i = 0 ; i < k ; ++i)
            if (other.contains(at(i)))
                return true;
        return false;
    }

    auto operator<< (std::ostream & s, const Kap & ap) -> std::ostream &
    {
        return s << "(a=" << ap.a << ",d=" << ap.d << ",k=" << ap.k << ")";
    }

    Coloring::Coloring(Number n, std::uint8_t fill) :
        _bits(static_cast<std::size_t>(n < 0 ? 0 : n), fill)
    {
        if (n < 0)
            throw std::invalid_argument("coloring size must be non-negative");
    }

    Coloring::Coloring(std::vector<std::uint8_t> bits) :
        _bits(std::move(bits))
    {
        for (auto b : _bits)
            if (b > 1)
                throw std::invalid_argument("coloring entries must be 0 or 1");
    }

    auto Coloring::from_string(std::string_view bits) -> Coloring
    {
        std::vector<std::uint8_t> v;
        v.reserve(bits.size());
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("coloring string must contain only 0 and 1");
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Coloring{std::move(v)};
    }

    auto Coloring::prefix(Number m) const -> Coloring
    {
        if (m < 0 || m > n())
            throw std::invalid_argument("prefix length out of range");
        return Coloring{std::vector<std::uint8_t>(_bits.begin(), _bits.begin() + m)};
    }

    auto Coloring::to_string() const -> std::string
    {
        std::string s;
        s.reserve(_bits.size());
        for (auto b : _bits)
            s.push_back(static_cast<char>('0' + b));
        return s;
    }

    auto require_valid_k(int k) -> void
    {
        if (k < 3)
            throw std::invalid_argument("progression length k must be at least 3");
    }

    auto enumerate_kaps(Number n, int k) -> std::vector<Kap>
    {
        require_valid_k(k);
        std::vector<Kap> result;
        result.reserve(static_cast<std::size_t>(count_kaps(n, k)));
        for (Number a = 1 ; a + (k - 1) <= n ; ++a)
            for (Number d = 1 ; a + (k - 1) * d <= n ; ++d)
                result.push_back(Kap{a, d, k});
        return result;
    }

    auto count_kaps(Number n, int k) -> std::int64_t
    {
        require_valid_k(k);
        std::int64_t total = 0;
        for (Number d = 1 ; (k - 1) * d < n ; ++d)
            total += n - (k - 1) * d;
        return total;
    }

    auto intersecting_kaps(const Kap & ap, Number n) -> std::vector<Kap>
    {
        require_valid_k(ap.k);
        if (! ap.fits(n))
            throw std::invalid_argument("progression is not contained in [n]");

        std::vector<Kap> result;
        for (int i = 0 ; i < ap.k ; ++i)
            for_each_kap_through(ap.at(i), n, ap.k, [&] (const Kap & other) { result.push_back(other); });

        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto is_monochromatic(const Coloring & coloring, const Kap & ap) -> bool
    {
        auto c = coloring.color(ap.a);
        for (int i = 1 ; i < ap.k ; ++i)
            if (coloring.color(ap.at(i)) != c)
                return false;
        return true;
    }

    namespace
    {
        // Scans in (a, d) order, handing each monochromatic AP to on_mono;
        // a false return stops the scan.
        template <typename OnMono>
        auto scan(const Coloring & coloring, int k, OnMono && on_mono) -> void
        {
            const auto bits = coloring.bits();
            const Number n = coloring.n();
            for (Number a = 1 ; a + (k - 1) <= n ; ++a) {
                const auto c = bits[static_cast<std::size_t>(a - 1)];
                for (Number d = 1 ; a + (k - 1) * d <= n ; ++d) {
                    int i = 1;
                    for (std::size_t pos = static_cast<std::size_t>(a - 1 + d) ; i < k ; ++i, pos += static_cast<std::size_t>(d))
                        if (bits[pos] != c)
                            break;
                    if (i == k && ! on_mono(Kap{a, d, k}))
                        return;
                }
            }
        }
    }

    auto first_mono_kap(const Coloring & coloring, int k) -> std::optional<Kap>
    {
        require_valid_k(k);
        std::optional<Kap> found;
        scan(coloring, k, [&] (const Kap & ap) { found = ap; return false; });
        return found;
    }

    auto count_mono_kaps(const Coloring & coloring, int k) -> std::int64_t
    {
        require_valid_k(k);
        std::int64_t count = 0;
        scan(coloring, k, [&] (const Kap &) { ++count; return true; });
        return count;
    }

    auto verify_proper(const Coloring & coloring, int k) -> VerifyReport
    {
        VerifyReport report;
        report.witness = first_mono_kap(coloring, k);
        report.proper = ! report.witness.has_value();
        report.aps_checked = count_kaps(coloring.n(), k);
        return report;
    }

    auto format_coloring(const Coloring & coloring, int k) -> std::string
    {
        return "vdw-coloring v1 k=" + std::to_string(k) + " n=" + std::to_string(coloring.n()) + "\n" + coloring.to_string() + "\n";
    }

    namespace
    {
        auto parse_field(std::string_view token, std::string_view key) -> std::int64_t
        {
            if (! token.starts_with(key))
                throw Error(ErrorCode::parse_error, "expected field " + std::string(key));
            token.remove_prefix(key.size());
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw Error(ErrorCode::parse_error, "malformed value for " + std::string(key));
            return value;
        }
    }

    auto parse_coloring(std::string_view text) -> ParsedColoring
    {
        auto newline = text.find('\n');
        if (newline == std::string_view::npos)
            throw Error(ErrorCode::parse_error, "missing header line");
        std::string_view header = text.substr(0, newline);
        std::string_view body = text.substr(newline + 1);

        constexpr std::string_view magic = "vdw-coloring v1 ";
        if (! header.starts_with(magic))
            throw Error(ErrorCode::parse_error, "bad header, expected 'vdw-coloring v1 k=<k> n=<n>'");
        header.remove_prefix(magic.size());
        auto space = header.find(' ');
        if (space == std::string_view::npos)
            throw Error(ErrorCode::parse_error, "bad header, expected 'k=<k> n=<n>'");

        auto k = parse_field(header.substr(0, space), "k=");
        auto n = parse_field(header.substr(space + 1), "n=");
        if (k < 3 || k > 1'000'000)
            throw Error(ErrorCode::parse_error, "k out of range");
        if (n < 0)
            throw Error(ErrorCode::parse_error, "n out of range");

        auto expected = static_cast<std::size_t>(n);
        if (body.size() != expected + 1 || body[expected] != '\n')
            throw Error(ErrorCode::parse_error, "body must be exactly n characters followed by a newline");

        ParsedColoring parsed;
        parsed.k = static_cast<int>(k);
        try {
            parsed.coloring = Coloring::from_string(body.substr(0, expected));
        }
        catch (const std::invalid_argument & e) {
            throw Error(ErrorCode::parse_error, e.what());
        }
        return parsed;
    }
}
