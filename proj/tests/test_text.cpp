#include <doctest.h>

#include "ftczin/element.hpp"
#include "ftczin/sample.hpp"

using namespace ftczin;

namespace {
const RingDescriptor Q = RingDescriptor::rationals();
}

TEST_CASE("canonical polynomial text") {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(Q);
    CarrierElement p = parseElement("3/2*x^2 + x + 1", poly);
    CHECK(toText(p) == "3/2*x^2 + x + 1");
    CHECK(p.poly().coeffs.at(2) == Scalar::rational(3, 2));
    CHECK(p.poly().coeffs.at(0) == Scalar::rational(1, 1));
    CHECK(toText(parseElement("1 + x + 3/2*x^2", poly)) == "3/2*x^2 + x + 1");
    CHECK(toText(parseElement("x - x", poly)) == "0");
    CHECK(toText(parseElement("-x^2 - 1", poly)) == "-x^2 - 1");
    CHECK_THROWS_AS(parseElement("x^-1", poly), ParseError);
    CHECK_THROWS_AS(parseElement("x +", poly), ParseError);
    CHECK_THROWS_AS(parseElement("2x", poly), ParseError);
    try {
        parseElement("x^2 + $", poly);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("canonical tensor text") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, false, Q);
    CarrierElement t = parseElement("[0,1] + [1,0]", sh);
    CHECK(t.tensor().words.size() == 2);
    CHECK(toText(t) == "[0,1] + [1,0]");
    // canonical word order is (length, lex), unit term last
    CHECK(toText(parseElement("3*1 + [2] + [0,1]", sh)) == "[2] + [0,1] + 3*1");
    CHECK(toText(parseElement("1", sh)) == "1");
    CHECK(toText(parseElement("[0] - [0]", sh)) == "0");
    CHECK(toText(parseElement("2*[0,0]", sh)) == "2*[0,0]");
    CHECK_THROWS_AS(parseElement("[3]", sh), ParseError);  // letter outside basis
    const CarrierDescriptor reduced = CarrierDescriptor::tensor(3, true, Q);
    CHECK_THROWS_AS(parseElement("[0] + 1", reduced), DescriptorMismatchError);
}

TEST_CASE("canonical hurwitz and semidirect text") {
    const CarrierDescriptor base = CarrierDescriptor::finiteAlgebra(
        StructureTable::powerQuotient(2, Q));
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(base);
    CarrierElement f = parseElement("(y + 1, 2*y, 0)", h);
    CHECK(f.hurwitz().entries.size() == 2);  // trailing zero trimmed
    CHECK(toText(f) == "(y + 1, 2*y)");
    CHECK(toText(zeroOf(h)) == "()");
    CHECK(parseElement("()", h) == zeroOf(h));

    auto spec = std::make_shared<SemidirectSpec>();
    spec->algebra = CarrierDescriptor::scalarRing(Q);
    spec->module = CarrierDescriptor::polynomial(Q);
    spec->baseAction = [](const CarrierElement& c, const CarrierElement& p) {
        return scalarMul(c.scalar(), p);
    };
    spec->zin = [](const CarrierElement& x, const CarrierElement& y) {
        return polyMul(x, y);
    };
    const CarrierDescriptor sd = CarrierDescriptor::semidirect(spec);
    CarrierElement e = parseElement("(3 | 2*x)", sd);
    CHECK(toText(e) == "(3 | 2*x)");
}

TEST_CASE("modular carriers print reduced representatives") {
    const RingDescriptor m5 = RingDescriptor::modular(5);
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(m5);
    CHECK(toText(parseElement("7*x^2 + 4 + 3", poly)) == "2*x^2 + 2");
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(m5));
    CHECK(toText(parseElement("(1 mod 5, 7 mod 5)", h)) == "(1 mod 5, 2 mod 5)");
}

TEST_CASE("print-parse-print is the identity on sampled elements") {
    std::vector<CarrierDescriptor> carriers = {
        CarrierDescriptor::polynomial(Q),
        CarrierDescriptor::polynomial(RingDescriptor::modular(4)),
        CarrierDescriptor::tensor(3, false, Q),
        CarrierDescriptor::tensor(2, true, RingDescriptor::integers()),
        CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(RingDescriptor::integers())),
        CarrierDescriptor::hurwitz(
            CarrierDescriptor::finiteAlgebra(StructureTable::powerQuotient(2, Q))),
        CarrierDescriptor::finiteAlgebra(StructureTable::powerQuotient(4, Q)),
        CarrierDescriptor::mixableWords(StructureTable::powerQuotient(4, Q)),
        CarrierDescriptor::scalarRing(Q),
        CarrierDescriptor::scalarRing(RingDescriptor::modular(7)),
    };
    for (const auto& desc : carriers) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            SampleRng rng(deriveSampleSeed(23, i));
            CarrierElement x = sampleElement(desc, rng);
            std::string text = toText(x);
            CarrierElement back = parseElement(text, desc);
            CHECK(back == x);
            CHECK(toText(back) == text);
        }
    }
}
