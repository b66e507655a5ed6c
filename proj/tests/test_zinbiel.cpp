#include <doctest.h>

#include "ftczin/zinbiel.hpp"

using namespace ftczin;

namespace {

const RingDescriptor Q = RingDescriptor::rationals();
const CheckConfig quick{0, 60};

ZinbielInstance polyZin(const CheckConfig& cfg = quick) {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(Q);
    return zinbielFromIntegration(
        "poly-zin", polyIntegration(poly),
        [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); },
        defaultSampler(poly), smallEnumeration(poly), cfg);
}

}  // namespace

TEST_CASE("shuffle Zinbiel operator on words") {
    ZinbielInstance z = shuffleZinbiel(3, Q);
    const CarrierDescriptor sh = z.carrier;
    auto t = [&](const char* s) { return parseElement(s, sh); };
    CHECK(z.zin(t("[0]"), t("[1]")) == t("[0,1]"));
    CHECK(z.zin(t("[0,1]"), t("[2]")) == t("[0,1,2] + [0,2,1]"));
    // an instance of the Zinbiel identity, expanded via the shuffle oracle
    CarrierElement lhs = z.zin(z.zin(t("[0]"), t("[1]")), t("[2]"));
    CarrierElement rhs = add(z.zin(t("[0]"), z.zin(t("[1]"), t("[2]"))),
                             z.zin(t("[0]"), z.zin(t("[2]"), t("[1]"))));
    CHECK(lhs == rhs);
    CHECK(lhs == t("[0,1,2] + [0,2,1]"));
}

TEST_CASE("symmetrized product equals the shuffle product on Sh+") {
    ZinbielInstance z = shuffleZinbiel(3, Q);
    const CarrierDescriptor sh = z.carrier;
    // exhaustive on word pairs of total length <= 5
    std::vector<Word> words;
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        if (len == 1) {
            for (int l = 0; l < 3; ++l) next.push_back(Word{{l}});
        } else {
            for (const Word& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int l = 0; l < 3; ++l) {
                        Word n = w;
                        n.letters.push_back(l);
                        next.push_back(n);
                    }
        }
        words.insert(words.end(), next.begin(), next.end());
    }
    std::size_t checked = 0;
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 5) continue;
            CarrierElement x = tensorWord(sh, u);
            CarrierElement y = tensorWord(sh, v);
            CHECK(symmetrizedProduct(z, x, y) == shuffleProduct(x, y));
            ++checked;
        }
    CHECK(checked > 400);
}

TEST_CASE("polynomial Zinbiel closed forms") {
    ZinbielInstance z = polyZin();
    const CarrierDescriptor poly = z.carrier;
    const Scalar one = Scalar::one(Q);
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n) {
            CarrierElement xm = polyMonomial(poly, m, one);
            CarrierElement xn = polyMonomial(poly, n, one);
            // x^m <|_P x^n = 1/(n+1) x^(m+n+1)
            CHECK(z.zin(xm, xn) ==
                  polyMonomial(poly, m + n + 1, Scalar::rational(1, n + 1)));
            // x^m * x^n = (m+n+2)/((m+1)(n+1)) x^(m+n+1)
            CHECK(symmetrizedProduct(z, xm, xn) ==
                  polyMonomial(poly, m + n + 1,
                               Scalar::rational(m + n + 2, (m + 1) * (n + 1))));
        }
    // x^1 * x^1 = x^3
    CarrierElement x = polyMonomial(poly, 1, one);
    CHECK(symmetrizedProduct(z, x, x) == polyMonomial(poly, 3, one));
    CHECK(isZero(symmetrizedProduct(z, x, zeroOf(poly))));
}

TEST_CASE("Hurwitz Zinbiel from the right shift") {
    const RingDescriptor Zr = RingDescriptor::integers();
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(Zr));
    ZinbielInstance z = zinbielFromIntegration(
        "hurwitz-zin", hurwitzRightShiftOp(h),
        [](const CarrierElement& a, const CarrierElement& m) { return hurwitzMul(a, m); },
        defaultSampler(h), smallEnumeration(h), quick);
    CarrierElement oneSeq = parseElement("(1)", h);
    CHECK(z.zin(oneSeq, oneSeq) == parseElement("(0, 1)", h));
    CHECK(checkZinbielIdentity(z, quick).holds);
}

TEST_CASE("Zinbiel identity holds on the valid instances") {
    CHECK(checkZinbielIdentity(shuffleZinbiel(3, Q), quick).holds);
    CHECK(checkZinbielIdentity(polyZin(), quick).holds);
    CHECK(checkBilinearity(shuffleZinbiel(3, Q), quick).holds);
    CHECK(checkBilinearity(polyZin(), quick).holds);
}

TEST_CASE("dropped-summand mutation violates the Zinbiel identity") {
    ZinbielInstance bad = shuffleZinbielDroppedSummand(3, Q);
    LawReport rep = checkZinbielIdentity(bad, quick);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->recheck());
}

TEST_CASE("zinbiel_from_integration rejects a non-integration") {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(Q);
    LinearOperator badP{"P'", poly, poly, [poly](const CarrierElement& p) {
                            std::map<long, Scalar> m;
                            for (const auto& [d, c] : p.poly().coeffs) m.emplace(d + 1, c);
                            return makePolynomial(poly, std::move(m));
                        }};
    try {
        zinbielFromIntegration(
            "bad", badP,
            [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); },
            defaultSampler(poly), smallEnumeration(poly), quick);
        CHECK(false);
    } catch (const InvalidInstanceError& e) {
        REQUIRE(e.reports.size() == 1);
        CHECK(e.reports[0].law == "rota-baxter");
        CHECK_FALSE(e.reports[0].holds);
        REQUIRE(e.reports[0].witness.has_value());
        CHECK(e.reports[0].witness->recheck());
    }
}

TEST_CASE("symmetrized product is commutative and associative") {
    for (ZinbielInstance z : {shuffleZinbiel(3, Q), polyZin()}) {
        CAPTURE(z.name);
        for (std::uint64_t i = 0; i < 300; ++i) {
            SampleRng rng(deriveSampleSeed(31, i));
            CarrierElement x = z.carrierSampler(rng);
            CarrierElement y = z.carrierSampler(rng);
            CarrierElement w = z.carrierSampler(rng);
            CHECK(symmetrizedProduct(z, x, y) == symmetrizedProduct(z, y, x));
            CHECK(symmetrizedProduct(z, symmetrizedProduct(z, x, y), w) ==
                  symmetrizedProduct(z, x, symmetrizedProduct(z, y, w)));
        }
    }
}

TEST_CASE("metamorphic: any valid integration yields a Zinbiel instance") {
    // hurwitz over Z/4 exercises a base ring with zero divisors
    const CarrierDescriptor h =
        CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(RingDescriptor::modular(4)));
    ZinbielInstance z = zinbielFromIntegration(
        "hurwitz-zin-mod4", hurwitzRightShiftOp(h),
        [](const CarrierElement& a, const CarrierElement& m) { return hurwitzMul(a, m); },
        defaultSampler(h), smallEnumeration(h), quick);
    CHECK(checkZinbielIdentity(z, quick).holds);
    CHECK(checkBilinearity(z, quick).holds);
}

TEST_CASE("Zinbiel morphism checks") {
    ZinbielInstance z = shuffleZinbiel(2, Q);
    ZinMorphism id{"id", identityOperator(z.base), identityOperator(z.carrier)};
    CHECK(checkZinMorphism(id, z, z, quick).holds);

    // negation fails: g(x<|y) = -(x<|y) but g(x)<|g(y) = +(x<|y)
    LinearOperator neg{"-id", z.carrier, z.carrier,
                       [](const CarrierElement& x) { return negate(x); }};
    ZinMorphism bad{"neg", identityOperator(z.base), neg};
    LawReport rep = checkZinMorphism(bad, z, z, quick);
    CHECK_FALSE(rep.holds);
    CHECK(rep.witness->recheck());
}

TEST_CASE("1 <| 1 stays undefined on the reduced shuffle algebra") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(2, false, Q);
    CarrierElement unit = tensorUnit(sh, Scalar::one(Q));
    CHECK_THROWS_AS(shuffleZinbielOp(unit, unit), Error);
}
