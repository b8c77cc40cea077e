#include "oracles.hpp"

#include <vdw/error.hpp>
#include <vdw/gf2p.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace vdw;
using namespace vdw::gf2p;

TEST_CASE("irreducibility by exhaustive factor search")
{
    for (std::uint64_t bits = 2 ; bits < 256 ; ++bits) {
        F2Poly f{bits};
        bool reducible = false;
        for (std::uint64_t g = 2 ; g < bits && ! reducible ; ++g)
            for (std::uint64_t h = g ; h < bits && ! reducible ; ++h) {
                F2Poly gh = F2Poly{g} * F2Poly{h};
                reducible = gh == f;
            }
        CHECK(is_irreducible(f) == ! reducible);
    }
}

TEST_CASE("smallest irreducible moduli")
{
    CHECK(find_irreducible(2).bits() == 0b111);
    CHECK(find_irreducible(3).bits() == 0b1011);
    CHECK(find_irreducible(5).bits() == 0b100101);
    CHECK(find_irreducible(8).bits() == 0b100011011);
    CHECK_THROWS_AS(Field(3, F2Poly{0b1111}), std::invalid_argument);
}

TEST_CASE("field arithmetic agrees with the reference multiplier")
{
    for (int p = 1 ; p <= 6 ; ++p) {
        Field f{p, find_irreducible(p)};
        const auto m = f.modulus().bits();
        for (std::uint32_t a = 0 ; a < f.order() ; ++a)
            for (std::uint32_t b = 0 ; b < f.order() ; ++b)
                CHECK(f.mul({a}, {b}).bits == oracle::gf_mul(a, b, m, p));
        for (std::uint32_t a = 1 ; a < f.order() ; ++a)
            CHECK(f.mul({a}, f.inverse({a})) == f.one());
        CHECK_THROWS_AS((void) f.inverse(f.zero()), std::domain_error);
    }
}

TEST_CASE("generators have full order and are the smallest such")
{
    for (int p = 2 ; p <= 11 ; ++p) {
        auto pf = make_primitive_field(p);
        const auto m = pf.field.modulus().bits();
        CHECK(oracle::order_by_walking(pf.generator.bits, m, p) == (std::uint64_t{1} << p) - 1);
        for (std::uint32_t g = 2 ; g < pf.generator.bits ; ++g)
            CHECK(oracle::order_by_walking(g, m, p) < (std::uint64_t{1} << p) - 1);
    }
}

TEST_CASE("number theory helpers")
{
    CHECK(prime_factors(2047) == std::vector<std::uint64_t>{23, 89});
    CHECK(prime_factors(255) == std::vector<std::uint64_t>{3, 5, 17});
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(largest_prime_at_most(15) == 13);
    CHECK(largest_prime_at_most(2) == 2);
}

TEST_CASE("known small colorings")
{
    CHECK(berlekamp_coloring(2).to_string() == "011011");
    CHECK(berlekamp_coloring(3).to_string() == "001011100101110010111");
}

TEST_CASE("coloring is the constant term of g^j, periodic with period 2^p - 1")
{
    for (int p : {2, 3, 5, 7}) {
        auto pf = make_primitive_field(p);
        auto c = berlekamp_coloring(p);
        const std::size_t period = (std::size_t{1} << p) - 1;
        CHECK(c.n() == static_cast<Number>(p * period));
        CHECK(c.to_string() == oracle::power_constant_terms(pf.generator.bits, pf.field.modulus().bits(), p, static_cast<std::size_t>(c.n())));
        for (Number j = 1 ; j + static_cast<Number>(period) <= c.n() ; ++j)
            CHECK(c.color(j) == c.color(j + static_cast<Number>(period)));
        std::vector<std::uint8_t> bits(c.bits().begin(), c.bits().end());
        CHECK(oracle::proper(bits, p + 1));
    }
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS((void) berlekamp_coloring(1), std::invalid_argument);
    CHECK_THROWS_AS((void) berlekamp_coloring(17), std::invalid_argument);
    try {
        (void) berlekamp_coloring(4);
        FAIL("composite p accepted");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::not_prime);
    }
}

TEST_CASE("corollary picks the largest prime at most k-1")
{
    CHECK(corollary_prime(4) == 3);
    CHECK(corollary_prime(10) == 7);
    CHECK(corollary_prime(12) == 11);
    CHECK(corollary_prime(17) == 13);
    auto c = corollary_coloring(10);
    CHECK(c == berlekamp_coloring(7));
    CHECK(verify_proper(c, 10).proper);
    CHECK_THROWS_AS((void) corollary_coloring(18), std::invalid_argument);
}
