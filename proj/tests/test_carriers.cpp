#include <doctest.h>

#include "ftczin/element.hpp"
#include "ftczin/sample.hpp"

using namespace ftczin;

namespace {

const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Z = RingDescriptor::integers();

CarrierElement qpoly(const char* text) {
    return parseElement(text, CarrierDescriptor::polynomial(Q));
}

CarrierElement intSeq(std::initializer_list<long> entries, const RingDescriptor& ring) {
    const CarrierDescriptor base = CarrierDescriptor::scalarRing(ring);
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(base);
    std::vector<CarrierElement> e;
    for (long v : entries) e.push_back(makeScalar(base, Scalar::fromInt(v, ring)));
    return makeHurwitz(h, std::move(e));
}

}  // namespace

TEST_CASE("carrier addition") {
    CHECK(add(qpoly("x^2 + 1"), qpoly("-1")) == qpoly("x^2"));
    CHECK(add(intSeq({1, 2}, Z), intSeq({0, 0, 3}, Z)) == intSeq({1, 2, 3}, Z));
    const CarrierDescriptor sh = CarrierDescriptor::tensor(2, true, Q);
    CarrierElement t = tensorWord(sh, Word{{0}});
    CHECK(add(t, zeroOf(sh)) == t);
    CHECK(isZero(add(t, negate(t))));
    CHECK_THROWS_AS(add(qpoly("x"), intSeq({1}, Z)), DescriptorMismatchError);
}

TEST_CASE("polynomial product") {
    CHECK(polyMul(qpoly("x + 1"), qpoly("x - 1")) == qpoly("x^2 - 1"));
    CHECK(polyMul(qpoly("x^2"), qpoly("x^3")) == qpoly("x^5"));
    CarrierElement p = qpoly("3/2*x^2 + x + 1");
    CHECK(polyMul(p, qpoly("1")) == p);
}

TEST_CASE("hurwitz product") {
    // (1,0,0,...) is the multiplicative identity
    CHECK(hurwitzMul(intSeq({1, 1, 1}, Z), intSeq({1}, Z)) == intSeq({1, 1, 1}, Z));
    // binomial convolution sum_k C(n,k) f(k) g(n-k), frozen from the oracle
    // below; e.g. n=1: C(1,0) 1*5 + C(1,1) 2*4 = 13
    CHECK(hurwitzMul(intSeq({1, 2, 3}, Z), intSeq({4, 5, 6}, Z)) ==
          intSeq({4, 13, 38, 81, 108}, Z));
    CHECK(isZero(hurwitzMul(intSeq({1, 2}, Z), zeroOf(intSeq({1}, Z).descriptor()))));

    // Independent oracle over Q: under a_n |-> a_n/n! x^n the Hurwitz product
    // must become the plain polynomial product (the power-series isomorphism
    // in characteristic zero).
    {
        const CarrierDescriptor hq = CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(Q));
        const CarrierDescriptor polyQ = CarrierDescriptor::polynomial(Q);
        auto toSeries = [&](const CarrierElement& f) {
            std::map<long, Scalar> m;
            Integer fact = 1;
            const auto& e = f.hurwitz().entries;
            for (std::size_t n = 0; n < e.size(); ++n) {
                if (n > 0) fact *= static_cast<long>(n);
                m.emplace(static_cast<long>(n),
                          e[n].scalar() * Scalar::rational(1, fact));
            }
            return makePolynomial(polyQ, std::move(m));
        };
        auto fromSeries = [&](const CarrierElement& p) {
            long maxDeg = p.poly().coeffs.empty() ? -1 : p.poly().coeffs.rbegin()->first;
            std::vector<CarrierElement> e;
            Integer fact = 1;
            for (long n = 0; n <= maxDeg; ++n) {
                if (n > 0) fact *= n;
                auto it = p.poly().coeffs.find(n);
                Scalar c = it == p.poly().coeffs.end() ? Scalar::zero(Q) : it->second;
                e.push_back(makeScalar(CarrierDescriptor::scalarRing(Q),
                                       c * Scalar::rational(fact, 1)));
            }
            return makeHurwitz(hq, std::move(e));
        };
        for (std::uint64_t i = 0; i < 300; ++i) {
            SampleRng rng(deriveSampleSeed(29, i));
            CarrierElement f = sampleElement(hq, rng);
            CarrierElement g = sampleElement(hq, rng);
            CHECK(hurwitzMul(f, g) == fromSeries(polyMul(toSeries(f), toSeries(g))));
        }
    }

    for (const RingDescriptor& ring : {Z, RingDescriptor::modular(4)}) {
        const CarrierDescriptor h =
            CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(ring));
        const CarrierElement one = oneOf(h);
        for (std::uint64_t i = 0; i < 500; ++i) {
            SampleRng rng(deriveSampleSeed(3, i));
            CarrierElement f = sampleElement(h, rng);
            CarrierElement g = sampleElement(h, rng);
            CarrierElement k = sampleElement(h, rng);
            CHECK(hurwitzMul(f, g) == hurwitzMul(g, f));
            CHECK(hurwitzMul(hurwitzMul(f, g), k) == hurwitzMul(f, hurwitzMul(g, k)));
            CHECK(hurwitzMul(f, one) == f);
        }
    }
}

TEST_CASE("shuffle product on words") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, false, Q);
    CarrierElement a = tensorWord(sh, Word{{0}});
    CarrierElement b = tensorWord(sh, Word{{1}});
    CHECK(shuffleProduct(a, b) ==
          parseElement("[0,1] + [1,0]", sh));
    CHECK(shuffleProduct(parseElement("[0,1]", sh), parseElement("[2]", sh)) ==
          parseElement("[0,1,2] + [0,2,1] + [2,0,1]", sh));
    // 1 sh v = v
    CarrierElement unit = tensorUnit(sh, Scalar::one(Q));
    CarrierElement v = parseElement("[0,1,2] + 2*[1]", sh);
    CHECK(shuffleProduct(unit, v) == v);
    // coinciding interleavings accumulate
    CHECK(shuffleProduct(a, a) == parseElement("2*[0,0]", sh));
}

TEST_CASE("shuffle oracle agreement, exhaustive to total length 6") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, false, Q);
    // all words over {0,1,2} of length 1..5
    std::vector<Word> words;
    for (int len = 1; len <= 5; ++len) {
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
            if (u.size() + v.size() > 6) continue;
            CHECK(shuffleProduct(tensorWord(sh, u), tensorWord(sh, v)) ==
                  shuffleProductOracle(sh, u, v));
            ++checked;
        }
    CHECK(checked > 1000);
    CHECK(shuffleProductOracle(sh, Word{{0}}, Word{{0}}) == parseElement("2*[0,0]", sh));
    CHECK(shuffleProductOracle(sh, Word{{0, 1}}, Word{{2, 0}}).tensor().words.size() <= 6);
}

TEST_CASE("shuffle product is commutative and associative on seeded samples") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, false, Q);
    const CarrierElement one = oneOf(sh);
    for (std::uint64_t i = 0; i < 500; ++i) {
        SampleRng rng(deriveSampleSeed(11, i));
        CarrierElement x = sampleElement(sh, rng);
        CarrierElement y = sampleElement(sh, rng);
        CarrierElement z = sampleElement(sh, rng);
        CHECK(shuffleProduct(x, y) == shuffleProduct(y, x));
        CHECK(shuffleProduct(shuffleProduct(x, y), z) == shuffleProduct(x, shuffleProduct(y, z)));
        CHECK(shuffleProduct(one, x) == x);
    }
}

TEST_CASE("mixable shuffle over k[y]/(y^4)") {
    auto table = StructureTable::powerQuotient(4, Q);
    const CarrierDescriptor rb = CarrierDescriptor::mixableWords(table);
    auto w = [&](std::initializer_list<int> ls) { return tensorWord(rb, Word{ls}); };
    // single letters multiply through the algebra: y * y = y^2
    CHECK(mixableShuffleProduct(w({1}), w({1})) == w({2}));
    // (a0 (x) a1) sh' (b0) = a0 b0 (x) a1
    CHECK(mixableShuffleProduct(w({1, 2}), w({1})) == w({2, 2}));
    // (a0 (x) a1) sh' (b0 (x) b1) = a0 b0 (x) (a1 sh b1)
    CHECK(mixableShuffleProduct(w({1, 2}), w({1, 3})) ==
          add(w({2, 2, 3}), w({2, 3, 2})));
    // nilpotency: y^3 * y^3 = 0 in the quotient
    CHECK(isZero(mixableShuffleProduct(w({3}), w({3}))));
    // (1_A) is the unit of RB(A)
    const CarrierElement one = oneOf(rb);
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng(deriveSampleSeed(5, i));
        CarrierElement x = sampleElement(rb, rng);
        CarrierElement y = sampleElement(rb, rng);
        CHECK(mixableShuffleProduct(one, x) == x);
        CHECK(mixableShuffleProduct(x, one) == x);
        CHECK(mixableShuffleProduct(x, y) == mixableShuffleProduct(y, x));
    }
}

TEST_CASE("mixable shuffle raises basis-overflow on a truncated presentation") {
    auto table = StructureTable::truncatedPowers(4, Q);
    const CarrierDescriptor rb = CarrierDescriptor::mixableWords(table);
    CHECK_THROWS_AS(
        mixableShuffleProduct(tensorWord(rb, Word{{3}}), tensorWord(rb, Word{{3}})),
        BasisOverflowError);
}

TEST_CASE("finite-basis algebra arithmetic") {
    auto table = StructureTable::powerQuotient(2, Q);  // dual numbers k[y]/(y^2)
    const CarrierDescriptor A = CarrierDescriptor::finiteAlgebra(table);
    CarrierElement y = finiteBasisElement(A, 1);
    CHECK(isZero(finiteMul(y, y)));
    CarrierElement e = parseElement("y + 1", A);
    CHECK(finiteMul(e, e) == parseElement("2*y + 1", A));
    CHECK(toText(e) == "y + 1");
    CHECK(asScalarMultipleOfOne(parseElement("3", A)) == Scalar::rational(3, 1));
    CHECK_FALSE(asScalarMultipleOfOne(y).has_value());
}

TEST_CASE("semidirect product k x| Sh+") {
    const RingDescriptor ring = Q;
    const CarrierDescriptor k = CarrierDescriptor::scalarRing(ring);
    const CarrierDescriptor shPlus = CarrierDescriptor::tensor(2, true, ring);
    auto spec = std::make_shared<SemidirectSpec>();
    spec->algebra = k;
    spec->module = shPlus;
    spec->baseAction = [](const CarrierElement& c, const CarrierElement& x) {
        return scalarMul(c.scalar(), x);
    };
    spec->zin = [](const CarrierElement& x, const CarrierElement& y) {
        return shuffleZinbielOp(x, y);
    };
    const CarrierDescriptor sd = CarrierDescriptor::semidirect(spec);

    auto sc = [&](long n) { return makeScalar(k, Scalar::fromInt(n, ring)); };
    CarrierElement xw = tensorWord(shPlus, Word{{0}});
    CarrierElement yw = tensorWord(shPlus, Word{{1}});
    CarrierElement one = oneOf(sd);
    CarrierElement by = makeSemidirect(sd, sc(3), yw);

    CHECK(semidirectMul(one, by) == by);
    // iota(x) iota(y) = (0, x * y) with x * y the symmetrized product
    CarrierElement ix = makeSemidirect(sd, sc(0), xw);
    CarrierElement iy = makeSemidirect(sd, sc(0), yw);
    CHECK(semidirectMul(ix, iy) ==
          makeSemidirect(sd, sc(0), parseElement("[0,1] + [1,0]", shPlus)));
    // Z-parts vanish: (a,0)(b,0) = (ab,0)
    CHECK(semidirectMul(makeSemidirect(sd, sc(2), zeroOf(shPlus)),
                        makeSemidirect(sd, sc(3), zeroOf(shPlus))) ==
          makeSemidirect(sd, sc(6), zeroOf(shPlus)));
    // action: (1,0) y = y, (0,x) y = y <| x, (a,x) 0 = 0
    CHECK(semidirectAction(one, yw) == yw);
    CHECK(semidirectAction(ix, yw) == shuffleZinbielOp(yw, xw));
    CHECK(isZero(semidirectAction(by, zeroOf(shPlus))));
}

TEST_CASE("the action differs from multiplication by iota (remark witness)") {
    const CarrierDescriptor k = CarrierDescriptor::scalarRing(Q);
    const CarrierDescriptor shPlus = CarrierDescriptor::tensor(2, true, Q);
    auto spec = std::make_shared<SemidirectSpec>();
    spec->algebra = k;
    spec->module = shPlus;
    spec->baseAction = [](const CarrierElement& c, const CarrierElement& x) {
        return scalarMul(c.scalar(), x);
    };
    spec->zin = [](const CarrierElement& x, const CarrierElement& y) {
        return shuffleZinbielOp(x, y);
    };
    const CarrierDescriptor sd = CarrierDescriptor::semidirect(spec);

    // a = 1, x = y = [0]: iota((a,x) y) must differ from (a,x) iota(y)
    CarrierElement w = tensorWord(shPlus, Word{{0}});
    CarrierElement ax = makeSemidirect(sd, makeScalar(k, Scalar::one(Q)), w);
    CarrierElement viaAction =
        makeSemidirect(sd, makeScalar(k, Scalar::zero(Q)), semidirectAction(ax, w));
    CarrierElement viaProduct =
        semidirectMul(ax, makeSemidirect(sd, makeScalar(k, Scalar::zero(Q)), w));
    CHECK(viaAction != viaProduct);
}

TEST_CASE("degenerate inputs are the zero elements") {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, true, Q);
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(Q));
    CHECK(isZero(zeroOf(sh)));
    CHECK(isZero(zeroOf(h)));
    CHECK(isZero(shuffleProduct(zeroOf(sh), tensorWord(sh, Word{{0}}))));
    CHECK(isZero(hurwitzMul(zeroOf(h), oneOf(h))));
}
