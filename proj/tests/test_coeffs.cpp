#include <doctest.h>

#include "gencliff/coeffs.hpp"
#include "testutil.hpp"

using namespace gencliff;
using testutil::Rng;

TEST_CASE("ring spec parsing")
{
    RingHandle f2 = make_ring("GF(2)");
    CHECK(f2.kind == RingKind::PrimeField);
    CHECK(f2.characteristic == 2);

    RingHandle zz = make_ring("ZZ");
    CHECK(zz.kind == RingKind::Integers);
    CHECK(zz.characteristic == 0);

    CHECK(make_ring("QQ").kind == RingKind::Rationals);

    CHECK_THROWS_WITH_AS(make_ring("GF(4)"), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_AS(make_ring("GF(91)"), Error);  // 7 * 13
    CHECK_THROWS_WITH_AS(make_ring("RR"), doctest::Contains("MalformedRingSpec"), Error);
    CHECK_THROWS_AS(make_ring("GF()"), Error);
    CHECK_THROWS_AS(make_ring("GF(x)"), Error);
    CHECK_THROWS_AS(make_ring(""), Error);

    CHECK(make_ring("GF(2147483647)").characteristic == 2147483647);  // 2^31 - 1
    CHECK_THROWS_AS(make_ring("GF(4294967311)"), Error);              // prime above 2^31
}

TEST_CASE("ring handle equality")
{
    CHECK(make_ring("GF(5)") == make_ring("GF(5)"));
    CHECK(!(make_ring("GF(5)") == make_ring("GF(7)")));
    CHECK(!(make_ring("ZZ") == make_ring("QQ")));
}

TEST_CASE("basic arithmetic examples")
{
    RingHandle f2 = make_ring("GF(2)");
    CHECK((Scalar::one(f2) + Scalar::one(f2)).is_zero());

    RingHandle qq = make_ring("QQ");
    Scalar two_thirds = Scalar::fraction(qq, 2, 3);
    Scalar three_quarters = Scalar::fraction(qq, 3, 4);
    CHECK(two_thirds * three_quarters == Scalar::fraction(qq, 1, 2));

    for (const char* spec : {"ZZ", "QQ", "GF(7)"}) {
        RingHandle r = make_ring(spec);
        Scalar x = Scalar::of(r, 5);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("inverses")
{
    CHECK(Scalar::one(make_ring("ZZ")).inv().is_one());
    RingHandle f5 = make_ring("GF(5)");
    CHECK(Scalar::of(f5, 2).inv() == Scalar::of(f5, 3));
    CHECK_THROWS_WITH_AS(Scalar::of(make_ring("ZZ"), 2).inv(), doctest::Contains("NotInvertible"), Error);
    CHECK_THROWS_WITH_AS(Scalar::zero(make_ring("QQ")).inv(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("mixed-ring operands are rejected")
{
    Scalar a = Scalar::of(make_ring("GF(2)"), 1);
    Scalar b = Scalar::of(make_ring("GF(3)"), 1);
    CHECK_THROWS_WITH_AS(a + b, doctest::Contains("RingMismatch"), Error);
}

TEST_CASE("ring axioms on random triples")
{
    Rng rng(20250809);
    for (const char* spec : {"ZZ", "QQ", "GF(5)"}) {
        RingHandle r = make_ring(spec);
        for (int i = 0; i < 500; ++i) {
            Scalar a = testutil::random_scalar(rng, r);
            Scalar b = testutil::random_scalar(rng, r);
            Scalar c = testutil::random_scalar(rng, r);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("exhaustive inverses over small prime fields")
{
    for (int64_t p : {2, 3, 5, 7}) {
        RingHandle r = make_ring("GF(" + std::to_string(p) + ")");
        for (int64_t a = 1; a < p; ++a)
            CHECK((Scalar::of(r, a) * Scalar::of(r, a).inv()).is_one());
    }
}

TEST_CASE("canonicalization is idempotent")
{
    Rng rng(99);
    for (const char* spec : {"ZZ", "QQ", "GF(7)"}) {
        RingHandle r = make_ring(spec);
        for (int i = 0; i < 200; ++i) {
            Scalar s = testutil::random_scalar(rng, r);
            CHECK(Scalar::fraction(r, s.num(), s.den()) == s);
        }
    }
    // fractions normalize: positive denominator, lowest terms, unique zero
    RingHandle qq = make_ring("QQ");
    Scalar s = Scalar::fraction(qq, 4, -6);
    CHECK(s.num() == -2);
    CHECK(s.den() == 3);
    CHECK(Scalar::fraction(qq, 0, -17) == Scalar::zero(qq));
}

TEST_CASE("arbitrary precision")
{
    RingHandle zz = make_ring("ZZ");
    Scalar big = Scalar::of(zz, 1);
    for (int i = 0; i < 40; ++i)
        big *= Scalar::of(zz, 1000000);
    CHECK(big.str().size() == 241);  // 10^240
    CHECK(big * Scalar::of(zz, 0) == Scalar::zero(zz));
}

TEST_CASE("scalar printing")
{
    CHECK(Scalar::of(make_ring("ZZ"), -7).str() == "-7");
    CHECK(Scalar::fraction(make_ring("QQ"), -2, 4).str() == "-1/2");
    CHECK(Scalar::of(make_ring("GF(5)"), -1).str() == "4");
}
