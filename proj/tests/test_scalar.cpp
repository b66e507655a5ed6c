#include <doctest.h>

#include "ftczin/sample.hpp"
#include "ftczin/scalar.hpp"

using namespace ftczin;

namespace {

// Independent oracle for modular inverses: exhaustive search.
long bruteForceInverse(long a, long m) {
    for (long x = 1; x < m; ++x)
        if ((a * x) % m == 1) return x;
    return -1;
}

}  // namespace

TEST_CASE("rational normalization") {
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(-3, -6).str() == "1/2");
    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK(Scalar::rational(0, 7).denominator() == 1);
    CHECK(Scalar::rational(3, -4).str() == "-3/4");
    CHECK_THROWS_AS(Scalar::rational(1, 0), ZeroDenominatorError);
}

TEST_CASE("exact arithmetic") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK(Scalar::modular(3, 5) * Scalar::modular(4, 5) == Scalar::modular(2, 5));
    CHECK(Scalar::integer(3) + Scalar::integer(0) == Scalar::integer(3));
    CHECK_THROWS_AS(Scalar::integer(1) + Scalar::rational(1, 2), RingMismatchError);
    CHECK_THROWS_AS(Scalar::modular(1, 3) + Scalar::modular(1, 5), RingMismatchError);
}

TEST_CASE("inverses") {
    CHECK(Scalar::rational(2, 3).inverse() == Scalar::rational(3, 2));
    CHECK(Scalar::modular(3, 7).inverse() == Scalar::modular(5, 7));  // 3*5 = 15 = 1 mod 7
    CHECK_THROWS_AS(Scalar::integer(2).inverse(), NotInvertibleError);
    CHECK_THROWS_AS(Scalar::rational(0, 1).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::modular(2, 4).inverse(), NotInvertibleError);
    CHECK(Scalar::integer(-1).inverse() == Scalar::integer(-1));

    // cross-check against the exhaustive oracle over small moduli
    for (long m : {2L, 3L, 4L, 5L, 6L, 7L, 9L, 12L})
        for (long a = 1; a < m; ++a) {
            long expected = bruteForceInverse(a, m);
            Scalar s = Scalar::modular(a, m);
            if (expected < 0) {
                CHECK_FALSE(s.invertible());
            } else {
                CHECK(s.inverse() == Scalar::modular(expected, m));
            }
        }
}

TEST_CASE("ring axioms on seeded samples") {
    for (RingDescriptor ring : {RingDescriptor::rationals(), RingDescriptor::integers(),
                                RingDescriptor::modular(4), RingDescriptor::modular(7)}) {
        const Scalar one = Scalar::one(ring);
        for (std::uint64_t i = 0; i < 1000; ++i) {
            SampleRng rng(deriveSampleSeed(17, i));
            Scalar a = sampleScalar(ring, rng);
            Scalar b = sampleScalar(ring, rng);
            Scalar c = sampleScalar(ring, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (a.invertible()) CHECK(a * a.inverse() == one);
        }
    }
}

TEST_CASE("canonical text round trip") {
    for (const char* t : {"1/2", "-3/4", "0", "7", "-12"}) {
        Scalar s = Scalar::parse(t, RingDescriptor::rationals());
        CHECK(s.str() == t);
        CHECK(Scalar::parse(s.str(), RingDescriptor::rationals()) == s);
    }
    CHECK(Scalar::parse(" 2/4 ", RingDescriptor::rationals()).str() == "1/2");
    CHECK(Scalar::parse("9 mod 5", RingDescriptor::modular(5)).str() == "4 mod 5");
    CHECK(Scalar::parse("  3  mod  7 ", RingDescriptor::modular(7)) == Scalar::modular(3, 7));
    CHECK_THROWS_AS(Scalar::parse("1/2", RingDescriptor::integers()), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1 mod 5", RingDescriptor::modular(7)), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x", RingDescriptor::rationals()), ParseError);
}
