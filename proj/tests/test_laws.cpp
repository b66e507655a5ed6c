#include <doctest.h>

#include "ftczin/laws.hpp"

using namespace ftczin;

namespace {

const RingDescriptor Q = RingDescriptor::rationals();
const CheckConfig quick{0, 60};

CarrierElement qpoly(const char* text) {
    return parseElement(text, CarrierDescriptor::polynomial(Q));
}

bool allHold(const std::vector<LawReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds) return false;
    return true;
}

}  // namespace

TEST_CASE("polynomial derivation and integration formulas") {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(Q);
    LinearOperator D = polyDerivation(poly);
    LinearOperator P = polyIntegration(poly);
    CHECK(D(qpoly("x^3")) == qpoly("3*x^2"));
    CHECK(P(qpoly("x^3")) == qpoly("1/4*x^4"));
    CHECK(isZero(D(qpoly("1"))));

    // integration needs invertible n+1; over Z/3 the degree-2 term breaks
    const CarrierDescriptor p3 = CarrierDescriptor::polynomial(RingDescriptor::modular(3));
    CHECK_THROWS_AS(polyIntegration(p3)(parseElement("x^2", p3)), NotInvertibleError);
}

TEST_CASE("hurwitz shifts") {
    FtcPairInstance pair = hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers()));
    auto seq = [&](std::initializer_list<long> v) {
        std::vector<CarrierElement> e;
        for (long n : v)
            e.push_back(makeScalar(pair.algebra.hurwitzBase(),
                                   Scalar::fromInt(n, RingDescriptor::integers())));
        return makeHurwitz(pair.algebra, std::move(e));
    };
    CHECK(pair.derivation(seq({1, 2, 3})) == seq({2, 3}));
    CHECK(pair.integration(seq({1, 2, 3})) == seq({0, 1, 2, 3}));
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng(deriveSampleSeed(7, i));
        CarrierElement f = pair.moduleSampler(rng);
        CHECK(pair.derivation(pair.integration(f)) == f);
    }
}

TEST_CASE("constant projector") {
    FtcPairInstance poly = polynomialPair();
    LinearOperator E = constantProjector(poly);
    CHECK(E(qpoly("x^2 + 3")) == qpoly("3"));
    CHECK(E(qpoly("1")) == qpoly("1"));

    FtcPairInstance hur = hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers()));
    LinearOperator Eh = constantProjector(hur);
    CarrierElement f = parseElement("(1, 2, 3)", hur.algebra);
    CHECK(Eh(f) == parseElement("(1)", hur.algebra));
}

TEST_CASE("the standard instances satisfy all five laws") {
    std::vector<FtcPairInstance> corpus;
    corpus.push_back(polynomialPair());
    corpus.push_back(hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers())));
    corpus.push_back(hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::modular(2))));
    corpus.push_back(shufflePair(3, Q));
    corpus.push_back(zeroModulePair());
    for (const auto& pair : corpus) {
        CAPTURE(pair.name);
        CHECK(allHold(checkAllLaws(pair, quick)));
        CHECK(checkActionLaws(pair, quick).holds);
        CHECK(checkKerDLinearity(pair, quick).holds);
        CHECK(checkOperatorLinearity(pair.derivation, pair.algebraSampler, pair.algebraEnum,
                                     quick)
                  .holds);
    }
}

TEST_CASE("shuffle pair details") {
    FtcPairInstance sh = shufflePair(3, Q);
    CarrierElement onePlusA = parseElement("[0] + 1", sh.algebra);
    CHECK(sh.derivation(onePlusA) == parseElement("[0]", sh.module));
    CHECK(sh.integration(parseElement("[0,1]", sh.module)) == parseElement("[0,1]", sh.algebra));
    // 1 acts as the identity
    CHECK(sh.action(oneOf(sh.algebra), parseElement("[0]", sh.module)) ==
          parseElement("[0]", sh.module));
    // E projects onto the degree-0 part
    LinearOperator E = constantProjector(sh);
    CHECK(E(parseElement("[0,1] + 3*1", sh.algebra)) == parseElement("3*1", sh.algebra));
}

TEST_CASE("separating example: zero maps satisfy FTC2 but fail FTC1") {
    FtcPairInstance pair = zeroMapsPair();
    CHECK(checkFtc2(pair, quick).holds);
    CHECK(checkLeibniz(pair, quick).holds);
    CHECK(checkRotaBaxter(pair, quick).holds);
    LawReport ftc1 = checkFtc1(pair, quick);
    CHECK_FALSE(ftc1.holds);
    REQUIRE(ftc1.witness.has_value());
    CHECK(ftc1.witness->recheck());  // the witness re-evaluates to a genuine inequality
}

TEST_CASE("separating example: (D, 0) fails FTC2 at the D.E clause") {
    FtcPairInstance pair = polyDerivationZeroIntegrationPair();
    LawReport ftc2 = checkFtc2(pair, quick);
    CHECK_FALSE(ftc2.holds);
    REQUIRE(ftc2.witness.has_value());
    CHECK(ftc2.witness->inputs.front().second == "D(E(a)) = 0");
    CHECK(ftc2.witness->recheck());
    // E = id here, so idempotence and multiplicativity hold; FTC1 holds too? No:
    // D(P(m)) = 0 != m, so FTC1 fails as well.
    CHECK_FALSE(checkFtc1(pair, quick).holds);
    CHECK_FALSE(checkHybridRotaBaxter(pair, quick).holds);
}

TEST_CASE("mutated operators are caught with witnesses") {
    FtcPairInstance mutD = polyMutatedDerivationPair();
    LawReport leibniz = checkLeibniz(mutD, quick);
    CHECK_FALSE(leibniz.holds);
    REQUIRE(leibniz.witness.has_value());
    CHECK(leibniz.witness->recheck());

    FtcPairInstance mutP = polyMutatedIntegrationPair();
    CHECK_FALSE(checkRotaBaxter(mutP, quick).holds);
    LawReport hybrid = checkHybridRotaBaxter(mutP, quick);
    CHECK_FALSE(hybrid.holds);
    CHECK(hybrid.witness->recheck());

    FtcPairInstance mutH = hurwitzMutatedDerivationPair();
    CHECK_FALSE(checkLeibniz(mutH, quick).holds);
    CHECK_FALSE(checkFtc1(mutH, quick).holds);
}

TEST_CASE("FTC2 equivalence verdicts agree across good and broken instances") {
    std::vector<FtcPairInstance> corpus;
    corpus.push_back(polynomialPair());
    corpus.push_back(hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::modular(2))));
    corpus.push_back(shufflePair(2, Q));
    corpus.push_back(zeroMapsPair());
    corpus.push_back(polyDerivationZeroIntegrationPair());
    corpus.push_back(polyMutatedDerivationPair());
    corpus.push_back(polyMutatedIntegrationPair());
    for (const auto& pair : corpus) {
        CAPTURE(pair.name);
        CHECK(checkFtc2Equivalence(pair, quick).holds);
    }
}

TEST_CASE("FTC1 + hybrid implies Rota-Baxter on the corpus") {
    std::vector<FtcPairInstance> corpus;
    corpus.push_back(polynomialPair());
    corpus.push_back(hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers())));
    corpus.push_back(shufflePair(2, Q));
    corpus.push_back(zeroMapsPair());
    corpus.push_back(polyMutatedIntegrationPair());
    for (const auto& pair : corpus) {
        CAPTURE(pair.name);
        bool premise = checkFtc1(pair, quick).holds && checkHybridRotaBaxter(pair, quick).holds;
        if (premise) CHECK(checkRotaBaxter(pair, quick).holds);
    }
}

TEST_CASE("augmentation detection") {
    CHECK(checkAugmented(polynomialPair(), quick).holds);
    CHECK(checkAugmented(shufflePair(3, Q), quick).holds);
    // H(A) is augmented iff A = k; dual numbers give a kernel element outside k.1
    FtcPairInstance dual = hurwitzPair(
        CarrierDescriptor::finiteAlgebra(StructureTable::powerQuotient(2, Q)));
    LawReport rep = checkAugmented(dual, quick);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->recheck());
    // H(Z) over k = Z is augmented
    CHECK(checkAugmented(hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers())),
                         quick)
              .holds);
}

TEST_CASE("hybrid rule concrete evaluation on the polynomial pair") {
    FtcPairInstance pair = polynomialPair();
    const auto D = pair.derivation.map;
    const auto P = pair.integration.map;
    CarrierElement x = qpoly("x");
    // P(D(x))P(D(x)) + P(D(x^2)) = x^2 + x^2 and xP(D(x)) + xP(D(x)) = 2x^2
    CarrierElement lhs = add(mul(P(D(x)), P(D(x))), P(D(mul(x, x))));
    CarrierElement rhs = add(mul(x, P(D(x))), mul(x, P(D(x))));
    CHECK(lhs == rhs);
    CHECK(lhs == qpoly("2*x^2"));
}

TEST_CASE("law reports serialize to JSON") {
    LawReport rep = checkFtc1(zeroMapsPair(), quick);
    std::string j = toJsonText(rep);
    CHECK(j.find("\"law\":\"ftc1\"") != std::string::npos);
    CHECK(j.find("\"status\":\"violated\"") != std::string::npos);
    CHECK(j.find("\"witness\"") != std::string::npos);
    std::string ok = toJsonText(checkFtc1(polynomialPair(), quick));
    CHECK(ok.find("\"status\":\"holds-on-samples\"") != std::string::npos);
    CHECK(ok.find("witness") == std::string::npos);
}

TEST_CASE("identity morphism passes the FTC morphism check") {
    FtcPairInstance pair = polynomialPair();
    FtcMorphism id{"id", identityOperator(pair.algebra), identityOperator(pair.module)};
    CHECK(checkFtcMorphism(id, pair, pair, quick).holds);
}
