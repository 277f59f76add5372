#include <doctest.h>

#include <random>

#include "qpolya/classno.hpp"
#include "qpolya/error.hpp"

using namespace qpolya;

TEST_CASE("imaginary class numbers by reduced forms") {
    CHECK(class_number_imaginary(make_field(-163)) == 1);
    CHECK(class_number_imaginary(make_field(-14)) == 4);
    CHECK(class_number_imaginary(make_field(-1365)) == 16);
    CHECK_THROWS_AS(class_number_imaginary(make_field(5)), Error);
}

TEST_CASE("batch form sieve") {
    auto c200 = batch_class_numbers_imaginary(200);
    CHECK(c200[163] == 1);
    auto c20 = batch_class_numbers_imaginary(20);
    CHECK(c20[20] == 2);
    auto c56 = batch_class_numbers_imaginary(56);
    CHECK(c56[56] == 4);

    CHECK_THROWS_AS(batch_class_numbers_imaginary(std::uint64_t(1) << 40, 1,
                                                  std::uint64_t(1) << 30),
                    Error);
}

TEST_CASE("batch equals pointwise on random fundamental discriminants <= 1e6") {
    const std::uint64_t X = 1000000;
    auto counts = batch_class_numbers_imaginary(X, 2);
    auto sf = squarefree_sieve(X);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> pick(2, X);
    int done = 0;
    while (done < 1000) {
        std::uint64_t m = pick(rng);
        if (!sf[m]) continue;
        std::uint64_t d = m % 4 == 3 ? m : 4 * m;
        if (d > X) continue;
        ++done;
        REQUIRE(counts[d] == class_number_imaginary(make_field(-std::int64_t(m))));
    }
}

TEST_CASE("fundamental units via continued fractions") {
    UnitData u2 = fundamental_unit_cf(2);
    CHECK(u2.a == 1);
    CHECK(u2.b == 1);
    CHECK(u2.q == 1);
    CHECK(u2.norm == -1);
    CHECK(u2.regulator == doctest::Approx(0.8813735870).epsilon(1e-9));

    UnitData u5 = fundamental_unit_cf(5);
    CHECK(u5.a == 1);
    CHECK(u5.b == 1);
    CHECK(u5.q == 2);
    CHECK(u5.norm == -1);
    CHECK(u5.regulator == doctest::Approx(0.4812118251).epsilon(1e-9));

    UnitData u3 = fundamental_unit_cf(3);
    CHECK(u3.a == 2);
    CHECK(u3.b == 1);
    CHECK(u3.q == 1);
    CHECK(u3.norm == +1);
    CHECK(u3.regulator == doctest::Approx(1.3169578969).epsilon(1e-9));

    CHECK_THROWS_AS(fundamental_unit_cf(12), Error);
    CHECK_THROWS_AS(fundamental_unit_cf(1), Error);
}

TEST_CASE("regulator matches the log of the exact unit value") {
    // independent of the log-sum accumulation: evaluate ln((a + b sqrt(D))/q)
    // from the exact coordinates whenever the unit fits long double range
    auto sf = squarefree_sieve(2000);
    for (std::int64_t D = 2; D <= 2000; ++D) {
        if (!sf[std::uint64_t(D)]) continue;
        UnitData u = fundamental_unit_cf(D);
        const long double a = u.a.convert_to<long double>();
        const long double b = u.b.convert_to<long double>();
        if (std::isinf(a) || std::isinf(b)) continue;
        const long double val = (a + b * std::sqrt((long double)D)) / u.q;
        const long double direct = std::log(val);
        REQUIRE(std::abs(double(direct) - u.regulator) / u.regulator < 1e-9);
        REQUIRE(val > 1.0L);
    }
}

TEST_CASE("unit Pell identity holds exactly for all square-free D <= 1e4") {
    auto sf = squarefree_sieve(10000);
    for (std::int64_t D = 2; D <= 10000; ++D) {
        if (!sf[std::uint64_t(D)]) continue;
        UnitData u = fundamental_unit_cf(D);
        REQUIRE(u.a * u.a - D * u.b * u.b == BigInt(u.q) * u.q * u.norm);
        REQUIRE(u.a >= 0);
        REQUIRE(u.b > 0);
        UnitSummary s = unit_summary_cf(D);
        REQUIRE(s.norm == u.norm);
        double rel = std::abs(s.regulator - u.regulator) / u.regulator;
        REQUIRE(rel < 1e-9);
    }
}

TEST_CASE("real class numbers by cycles of reduced indefinite forms") {
    ClassData d10 = class_number_real(make_field(10));
    CHECK(d10.h == 2);
    CHECK(d10.h_plus == 2);

    ClassData d34 = class_number_real(make_field(34));
    CHECK(d34.h == 2);
    CHECK(d34.h_plus == 4);

    ClassData d5 = class_number_real(make_field(5));
    CHECK(d5.h == 1);
    CHECK(d5.h_plus == 1);

    CHECK_THROWS_AS(class_number_real(make_field(-5)), Error);
}

TEST_CASE("h+ = h [U+:U^2] for all square-free 2 <= D <= 1e4") {
    auto sf = squarefree_sieve(10000);
    SpfSieve sieve(10001);
    for (std::int64_t D = 2; D <= 10000; ++D) {
        if (!sf[std::uint64_t(D)]) continue;
        QuadField f = make_field(D);
        ClassData cd = class_number_real(f, &sieve);
        int norm = unit_summary_cf(D).norm;
        REQUIRE(cd.h_plus == cd.h * (norm == +1 ? 2 : 1));
    }
}

TEST_CASE("analytic class number oracle") {
    CHECK(class_number_analytic(make_field(-163)) == 1);
    CHECK(class_number_analytic(make_field(2)) == 1);
    CHECK(class_number_analytic(make_field(-40755)) == 32);
    CHECK_THROWS_AS(class_number_analytic(make_field(-10000019)), Error);
}

TEST_CASE("form counts match the analytic formula for all |disc| <= 1e4") {
    auto sf = squarefree_sieve(10000);
    SpfSieve sieve(10001);
    for (std::int64_t m = 2; m <= 10000; ++m) {
        if (!sf[std::uint64_t(m)]) continue;
        QuadField fi = make_field(-m);
        if (fi.abs_disc <= 10000)
            REQUIRE(class_number_imaginary(fi) == class_number_analytic(fi));
        QuadField fr = make_field(m);
        if (fr.abs_disc <= 10000)
            REQUIRE(class_number_real(fr, &sieve).h == class_number_analytic(fr));
    }
}
