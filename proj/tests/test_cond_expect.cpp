#include "oracles.hpp"

#include <vdw/cond_expect.hpp>

#include <doctest.h>

#include <random>

using namespace vdw;

TEST_CASE("potential agrees with direct summation")
{
    std::mt19937_64 rng{11};
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int k = 3 + static_cast<int>(rng() % 3);
        PartialAssignment a(rng() % 25);
        for (auto & c : a)
            c = static_cast<Cell>(rng() % 3);
        CHECK(potential(a, k).to_double() == doctest::Approx(oracle::expected_mono(a, k)));
    }
}

TEST_CASE("potential of the empty assignment is count_kaps / 2^(k-1)")
{
    for (int k = 3 ; k <= 8 ; ++k)
        for (Number n : {0, 5, 17, 40}) {
            PartialAssignment a(static_cast<std::size_t>(n), Cell::half);
            CHECK(potential(a, k) == Dyadic{static_cast<std::uint64_t>(count_kaps(n, k))} * Dyadic::inverse_power_of_two(k - 1));
        }
}

TEST_CASE("domain size is the largest n with n^2 < k 2^(k-1)")
{
    CHECK(derandomized_domain_size(16) == 724);
    CHECK(derandomized_domain_size(3) == 3);
    for (int k = 3 ; k <= 30 ; ++k) {
        auto n = derandomized_domain_size(k);
        auto cap = static_cast<long double>(k) * std::pow(2.0L, k - 1);
        CHECK(static_cast<long double>(n) * n < cap);
        CHECK(static_cast<long double>(n + 1) * (n + 1) >= cap);
    }
}

TEST_CASE("each step keeps the smaller branch, ties to 0")
{
    const int k = 5;
    const Number n = derandomized_domain_size(k);
    PartialAssignment a(static_cast<std::size_t>(n), Cell::half);
    auto c = derandomize(n, k, [&] (Number x, const Dyadic & before, const Dyadic & after) {
        CHECK(before == potential(a, k));
        auto zero = a, one = a;
        zero[static_cast<std::size_t>(x - 1)] = Cell::zero;
        one[static_cast<std::size_t>(x - 1)] = Cell::one;
        auto p0 = potential(zero, k), p1 = potential(one, k);
        CHECK(after == std::min(p0, p1));
        CHECK(p0 + p1 == before + before);
        a = p0 <= p1 ? zero : one;
    });
    for (Number x = 1 ; x <= n ; ++x)
        CHECK(static_cast<Cell>(c.color(x)) == a[static_cast<std::size_t>(x - 1)]);
}

TEST_CASE("outputs are proper and deterministic")
{
    for (int k = 3 ; k <= 10 ; ++k) {
        auto c = construct_derandomized(k);
        CHECK(c.n() == derandomized_domain_size(k));
        std::vector<std::uint8_t> bits(c.bits().begin(), c.bits().end());
        CHECK(oracle::proper(bits, k));
        CHECK(c == construct_derandomized(k));
    }
}
