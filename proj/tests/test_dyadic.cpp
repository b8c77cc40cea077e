#include <vdw/dyadic.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace vdw;

TEST_CASE("normal form")
{
    CHECK(Dyadic::ratio(4, 3) == Dyadic::ratio(1, 1));
    CHECK(Dyadic::ratio(0, 9) == Dyadic{});
    CHECK(Dyadic::ratio(3, -2) == Dyadic{12});
    CHECK(Dyadic::ratio(6, 2).to_string() == "3/2^1");
}

TEST_CASE("arithmetic is exact")
{
    auto half = Dyadic::inverse_power_of_two(1);
    auto quarter = Dyadic::inverse_power_of_two(2);
    CHECK(half + quarter == Dyadic::ratio(3, 2));
    CHECK(half - quarter == quarter);
    CHECK(half * half == quarter);
    CHECK(half > quarter);
    CHECK(Dyadic{1} - half == half);
    CHECK((Dyadic::inverse_power_of_two(100) + Dyadic{1}).to_double() == doctest::Approx(1.0));
    CHECK_THROWS_AS(quarter - half, std::domain_error);
}

TEST_CASE("precision loss is an error")
{
    auto tiny = Dyadic::inverse_power_of_two(120);
    CHECK_THROWS_AS((void) (tiny + Dyadic{1u << 20}), std::overflow_error);
}
