#include "oracles.hpp"

#include <vdw/error.hpp>
#include <vdw/oracle.hpp>

#include <doctest.h>

using namespace vdw;

namespace
{
    auto brute_force_exists(Number n, int k) -> bool
    {
        for (std::uint32_t mask = 0 ; mask < (1u << n) ; ++mask) {
            std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
            for (Number i = 0 ; i < n ; ++i)
                c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(mask >> i & 1);
            if (oracle::proper(c, k))
                return true;
        }
        return false;
    }
}

TEST_CASE("exists_proper agrees with brute force")
{
    for (int k = 3 ; k <= 4 ; ++k)
        for (Number n = 1 ; n <= 16 ; ++n) {
            auto r = exists_proper(n, k);
            CHECK(r.coloring.has_value() == brute_force_exists(n, k));
            if (r.coloring) {
                CHECK(r.coloring->n() == n);
                CHECK(r.coloring->color(1) == 0);
                CHECK(verify_proper(*r.coloring, k).proper);
            }
        }
}

TEST_CASE("W(3,2) = 9")
{
    SearchStats stats;
    CHECK(exact_w(3, 64, &stats) == 9);
    CHECK(stats.max_depth_reached == 8);
    CHECK_FALSE(exists_proper(9, 3).coloring);
    CHECK(exists_proper(8, 3).coloring);
}

TEST_CASE("W(4,2) = 35")
{
    CHECK(exact_w(4) == 35);
    CHECK(exists_proper(34, 4).coloring);
}

TEST_CASE("unresolved and budget errors")
{
    try {
        (void) exact_w(3, 6);
        FAIL("expected not_resolved");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::not_resolved);
    }
    try {
        (void) exists_proper(30, 4, 5);
        FAIL("expected budget_exceeded");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::budget_exceeded);
    }
    CHECK_THROWS_AS((void) exact_w(5), std::invalid_argument);
}
