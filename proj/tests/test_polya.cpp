#include <doctest.h>

#include "qpolya/error.hpp"
#include "qpolya/polya.hpp"

using namespace qpolya;

TEST_CASE("polya order") {
    CHECK(polya_order(make_field(-5), std::nullopt) == 2);
    CHECK(polya_order(make_field(2), -1) == 1);
    CHECK(polya_order(make_field(34), +1) == 1);
    CHECK_THROWS_AS(polya_order(make_field(34), std::nullopt), Error);
}

TEST_CASE("genus numbers") {
    CHECK(genus_number(make_field(-21), std::nullopt) == 4);
    CHECK(genus_number(make_field(3), +1) == 1);
    CHECK(genus_number(make_field(10), -1) == 2);
    CHECK(narrow_genus_number(make_field(3)) == 2);
    CHECK(narrow_genus_number(make_field(2)) == 1);
    CHECK(narrow_genus_number(make_field(-5)) == 2);
}

TEST_CASE("polya order via the divisor function") {
    CHECK(polya_order_via_tau(make_field(-5), std::nullopt) == 2);
    CHECK(polya_order_via_tau(make_field(34), +1) == 1);
    CHECK(polya_order_via_tau(make_field(17), -1) == 1);
}

TEST_CASE("invariant bundles match the classification tables") {
    ClassInvariants a = invariants(make_field(-1365));
    CHECK(a.h == 16);
    CHECK(a.g == 16);
    CHECK(a.polya_order == 16);
    CHECK(a.polya_index == 1);

    ClassInvariants b = invariants(make_field(451605));
    CHECK(b.polya_order == 16);
    CHECK(b.g == 16);
    CHECK(b.h == 16);
    CHECK(b.g_plus == 32);
    CHECK(b.h_plus == 32);

    ClassInvariants c = invariants(make_field(81770));
    CHECK(c.g == 16);
    CHECK(c.h == 16);
    CHECK(c.polya_order == 8);
    CHECK(c.g_plus == 16);
    CHECK(c.h_plus == 32);
}

TEST_CASE("identity suite over all square-free |D| <= 1e4") {
    auto sf = squarefree_sieve(10000);
    SpfSieve sieve(10001);
    for (std::int64_t m = 2; m <= 10000; ++m) {
        if (!sf[std::uint64_t(m)]) continue;
        // invariants() itself asserts: #Po = c_K tau(d_K) (halved for norm +1),
        // #Po | h, g | h, g+ | h+, and #Po h+ = g+ h
        ClassInvariants ri = invariants(make_field(m), &sieve);
        ClassInvariants ii = invariants(make_field(-m), &sieve);
        REQUIRE(ii.polya_order == ii.g);
        if (*ri.unit_norm == -1 ||
            (*ri.unit_norm == +1 && has_prime_3mod4(ri.field))) {
            REQUIRE(ri.g == ri.polya_order);
        } else {
            REQUIRE(ri.g == 2 * ri.polya_order);
        }
        // narrow genus doubles the wide one exactly when a p = 3 mod 4 ramifies
        REQUIRE(ri.g_plus == (has_prime_3mod4(ri.field) ? 2 : 1) * ri.g);
        if (has_prime_3mod4(ri.field)) REQUIRE(*ri.unit_norm == +1);
    }
}
