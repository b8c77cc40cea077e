#pragma once

#include <vdw/ap.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vdw::gf2p
{
    /// Polynomial over F2 of degree at most 63; bit i is the coefficient of x^i.
    class F2Poly
    {
        public:
            constexpr F2Poly() = default;
            constexpr explicit F2Poly(std::uint64_t bits) : _bits(bits) { }

            [[nodiscard]] constexpr auto bits() const -> std::uint64_t { return _bits; }
            [[nodiscard]] constexpr auto is_zero() const -> bool { return _bits == 0; }

            /// -1 for the zero polynomial.
            [[nodiscard]] constexpr auto degree() const -> int
            {
                return _bits == 0 ? -1 : 63 - __builtin_clzll(_bits);
            }

            [[nodiscard]] constexpr auto coefficient(int i) const -> int { return static_cast<int>((_bits >> i) & 1); }

            [[nodiscard]] auto to_string() const -> std::string;

            friend constexpr auto operator+(F2Poly x, F2Poly y) -> F2Poly { return F2Poly{x._bits ^ y._bits}; }
            friend auto operator*(F2Poly x, F2Poly y) -> F2Poly;
            friend auto operator%(F2Poly x, F2Poly m) -> F2Poly;

            friend constexpr auto operator<=>(const F2Poly &, const F2Poly &) = default;

        private:
            std::uint64_t _bits = 0;
    };

    /// Coordinates over the basis 1, x, ..., x^(p-1).
    struct FieldElement
    {
        std::uint32_t bits = 0;

        [[nodiscard]] constexpr auto constant_term() const -> std::uint8_t { return static_cast<std::uint8_t>(bits & 1); }

        friend constexpr auto operator<=>(const FieldElement &, const FieldElement &) = default;
    };

    constexpr int max_degree = 20;

    [[nodiscard]] auto is_irreducible(F2Poly f) -> bool;

    /// Numerically smallest monic irreducible polynomial of degree p, 1 <= p <= 20.
    [[nodiscard]] auto find_irreducible(int p) -> F2Poly;

    /// GF(2^p) as F2[x] modulo an irreducible polynomial of degree p.
    class Field
    {
        public:
            /// Throws std::invalid_argument unless modulus is irreducible of degree p.
            Field(int p, F2Poly modulus);

            [[nodiscard]] auto degree() const -> int { return _p; }
            [[nodiscard]] auto modulus() const -> F2Poly { return _modulus; }
            [[nodiscard]] auto order() const -> std::uint64_t { return std::uint64_t{1} << _p; }

            [[nodiscard]] auto zero() const -> FieldElement { return {}; }
            [[nodiscard]] auto one() const -> FieldElement { return {1}; }
            [[nodiscard]] auto x() const -> FieldElement;

            [[nodiscard]] auto add(FieldElement a, FieldElement b) const -> FieldElement { return {a.bits ^ b.bits}; }
            [[nodiscard]] auto mul(FieldElement a, FieldElement b) const -> FieldElement;
            [[nodiscard]] auto pow(FieldElement a, std::uint64_t e) const -> FieldElement;
            /// Throws std::domain_error for zero.
            [[nodiscard]] auto inverse(FieldElement a) const -> FieldElement;

            /// Multiplicative order of a nonzero element.
            [[nodiscard]] auto multiplicative_order(FieldElement a) const -> std::uint64_t;

            /// P(beta) for P over F2.
            [[nodiscard]] auto evaluate(F2Poly poly, FieldElement beta) const -> FieldElement;

        private:
            int _p;
            F2Poly _modulus;
    };

    /// Numerically smallest element of multiplicative order 2^p - 1, checked
    /// against the prime factors of 2^p - 1 (trial division, p <= 20).
    [[nodiscard]] auto find_generator(const Field & field) -> FieldElement;

    /// Field with the smallest irreducible modulus, plus its smallest generator.
    struct PrimitiveField
    {
        Field field;
        FieldElement generator;
    };

    [[nodiscard]] auto make_primitive_field(int p) -> PrimitiveField;

    /// Distinct prime factors by trial division.
    [[nodiscard]] auto prime_factors(std::uint64_t m) -> std::vector<std::uint64_t>;

    [[nodiscard]] auto is_prime(std::int64_t m) -> bool;

    /// Greatest prime <= m (sieve); m >= 2.
    [[nodiscard]] auto largest_prime_at_most(std::int64_t m) -> std::int64_t;

    constexpr int max_berlekamp_prime = 16;

    /// Colors j in [p(2^p - 1)] with the constant term of g^j. Proper for
    /// (p+1)-APs when p is prime; verified before returning. Throws
    /// vdw::Error(not_prime) for composite p and std::invalid_argument when
    /// p is outside [2, 16].
    [[nodiscard]] auto berlekamp_coloring(int p) -> Coloring;

    /// berlekamp_coloring(largest prime <= k-1); proper for every AP length
    /// >= p+1, so in particular for k. Requires 4 <= k and p <= 16 (k <= 17).
    [[nodiscard]] auto corollary_coloring(int k) -> Coloring;

    /// The prime used by corollary_coloring(k).
    [[nodiscard]] auto corollary_prime(int k) -> int;
}
