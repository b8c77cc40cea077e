#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vdw
{
    /// Exact non-negative dyadic rational num / 2^exp, kept normalized
    /// (num odd, or num == 0 with exp == 0). Arithmetic throws
    /// std::overflow_error rather than losing precision.
    class Dyadic
    {
        public:
            using Mantissa = unsigned __int128;

            constexpr Dyadic() = default;

            constexpr Dyadic(std::uint64_t integer) : _num(integer), _exp(0) { }

            /// num / 2^exp
            static constexpr auto ratio(Mantissa num, int exp) -> Dyadic
            {
                Dyadic r;
                r._num = num;
                r._exp = exp;
                r.normalize();
                return r;
            }

            /// 2^-exp
            static constexpr auto inverse_power_of_two(int exp) -> Dyadic
            {
                return ratio(1, exp);
            }

            [[nodiscard]] constexpr auto numerator() const -> Mantissa { return _num; }
            [[nodiscard]] constexpr auto exponent() const -> int { return _exp; }
            [[nodiscard]] constexpr auto is_zero() const -> bool { return _num == 0; }
            [[nodiscard]] constexpr auto is_integer() const -> bool { return _exp <= 0; }

            [[nodiscard]] auto to_double() const -> double
            {
                double v = static_cast<double>(_num);
                for (int i = 0 ; i < _exp ; ++i)
                    v /= 2.0;
                for (int i = 0 ; i > _exp ; --i)
                    v *= 2.0;
                return v;
            }

            [[nodiscard]] auto to_string() const -> std::string
            {
                std::string s = mantissa_string(_num);
                if (_exp > 0)
                    s += "/2^" + std::to_string(_exp);
                return s;
            }

            friend constexpr auto operator+(const Dyadic & x, const Dyadic & y) -> Dyadic
            {
                if (x.is_zero())
                    return y;
                if (y.is_zero())
                    return x;
                int e = x._exp > y._exp ? x._exp : y._exp;
                return ratio(shifted(x._num, e - x._exp) + shifted(y._num, e - y._exp), e);
            }

            /// Throws std::domain_error if y > x.
            friend constexpr auto operator-(const Dyadic & x, const Dyadic & y) -> Dyadic
            {
                if (y.is_zero())
                    return x;
                int e = x._exp > y._exp ? x._exp : y._exp;
                Mantissa a = shifted(x._num, e - x._exp), b = shifted(y._num, e - y._exp);
                if (b > a)
                    throw std::domain_error("negative dyadic difference");
                return ratio(a - b, e);
            }

            friend constexpr auto operator*(const Dyadic & x, const Dyadic & y) -> Dyadic
            {
                if (x.is_zero() || y.is_zero())
                    return Dyadic{};
                if (bit_width(x._num) + bit_width(y._num) > 127)
                    throw std::overflow_error("dyadic product overflow");
                return ratio(x._num * y._num, x._exp + y._exp);
            }

            auto operator+=(const Dyadic & y) -> Dyadic & { return *this = *this + y; }
            auto operator-=(const Dyadic & y) -> Dyadic & { return *this = *this - y; }
            auto operator*=(const Dyadic & y) -> Dyadic & { return *this = *this * y; }

            friend constexpr auto operator==(const Dyadic & x, const Dyadic & y) -> bool
            {
                return x._num == y._num && x._exp == y._exp;
            }

            friend constexpr auto operator<=>(const Dyadic & x, const Dyadic & y) -> std::strong_ordering
            {
                int e = x._exp > y._exp ? x._exp : y._exp;
                Mantissa a = shifted(x._num, e - x._exp), b = shifted(y._num, e - y._exp);
                return a <=> b;
            }

        private:
            Mantissa _num = 0;
            int _exp = 0;

            static constexpr auto bit_width(Mantissa v) -> int
            {
                int w = 0;
                while (v) {
                    ++w;
                    v >>= 1;
                }
                return w;
            }

            // leaves one bit of headroom so that a following addition cannot wrap
            static constexpr auto shifted(Mantissa v, int by) -> Mantissa
            {
                if (v != 0 && bit_width(v) + by > 126)
                    throw std::overflow_error("dyadic alignment overflow");
                return v << by;
            }

            constexpr auto normalize() -> void
            {
                if (_num == 0) {
                    _exp = 0;
                    return;
                }
                while (_exp > 0 && (_num & 1) == 0) {
                    _num >>= 1;
                    --_exp;
                }
                while (_exp < 0) {
                    _num = shifted(_num, 1);
                    ++_exp;
                }
            }

            static auto mantissa_string(Mantissa v) -> std::string
            {
                if (v == 0)
                    return "0";
                std::string s;
                while (v) {
                    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
                    v /= 10;
                }
                return s;
            }
    };
}
