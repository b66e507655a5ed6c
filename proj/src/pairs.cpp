#include "ftczin/ftc_pair.hpp"

namespace ftczin {

LinearOperator polyDerivation(const CarrierDescriptor& poly) {
    return {"D", poly, poly, [poly](const CarrierElement& p) {
                std::map<long, Scalar> m;
                for (const auto& [d, c] : p.poly().coeffs)
                    if (d >= 1) m.emplace(d - 1, c * Scalar::fromInt(d, poly.ring()));
                return makePolynomial(poly, std::move(m));
            }};
}

LinearOperator polyIntegration(const CarrierDescriptor& poly) {
    return {"P", poly, poly, [poly](const CarrierElement& p) {
                std::map<long, Scalar> m;
                for (const auto& [d, c] : p.poly().coeffs)
                    m.emplace(d + 1, c * Scalar::fromInt(d + 1, poly.ring()).inverse());
                return makePolynomial(poly, std::move(m));
            }};
}

LinearOperator hurwitzLeftShiftOp(const CarrierDescriptor& h) {
    return {"D", h, h, [](const CarrierElement& f) { return hurwitzShiftLeft(f); }};
}

LinearOperator hurwitzRightShiftOp(const CarrierDescriptor& h) {
    return {"P", h, h, [](const CarrierElement& f) { return hurwitzShiftRight(f); }};
}

FtcPairInstance polynomialPair(const RingDescriptor& ring) {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(ring);
    FtcPairInstance pair;
    pair.name = "poly-ftc";
    if (!(ring == RingDescriptor::rationals())) pair.name += "(" + ring.str() + ")";
    pair.algebra = poly;
    pair.module = poly;
    pair.action = [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); };
    pair.derivation = polyDerivation(poly);
    pair.integration = polyIntegration(poly);
    pair.algebraSampler = defaultSampler(poly);
    pair.moduleSampler = defaultSampler(poly);
    pair.algebraEnum = smallEnumeration(poly);
    pair.moduleEnum = smallEnumeration(poly);
    return pair;
}

FtcPairInstance hurwitzPair(const CarrierDescriptor& base) {
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(base);
    FtcPairInstance pair;
    pair.name = "hurwitz-ftc(" + base.str() + ")";
    pair.algebra = h;
    pair.module = h;
    pair.action = [](const CarrierElement& a, const CarrierElement& m) {
        return hurwitzMul(a, m);
    };
    pair.derivation = hurwitzLeftShiftOp(h);
    pair.integration = hurwitzRightShiftOp(h);
    pair.algebraSampler = defaultSampler(h);
    pair.moduleSampler = defaultSampler(h);
    pair.algebraEnum = smallEnumeration(h);
    pair.moduleEnum = smallEnumeration(h);
    return pair;
}

FtcPairInstance shufflePair(int basisSize, const RingDescriptor& ring) {
    const CarrierDescriptor sh = CarrierDescriptor::tensor(basisSize, false, ring);
    const CarrierDescriptor shPlus = CarrierDescriptor::tensor(basisSize, true, ring);
    FtcPairInstance pair;
    pair.name = "shuffle-ftc(" + std::to_string(basisSize) + ")";
    pair.algebra = sh;
    pair.module = shPlus;
    pair.action = [](const CarrierElement& a, const CarrierElement& w) {
        return shuffleModuleAction(a, w);
    };
    // D projects out the degree >= 1 part, P is the canonical injection.
    pair.derivation = {"D", sh, shPlus, [shPlus](const CarrierElement& x) {
                           return makeTensor(shPlus, x.tensor().words,
                                             Scalar::zero(shPlus.ring()));
                       }};
    pair.integration = {"P", shPlus, sh, [sh](const CarrierElement& x) {
                            return makeTensor(sh, x.tensor().words, Scalar::zero(sh.ring()));
                        }};
    pair.algebraSampler = defaultSampler(sh);
    pair.moduleSampler = defaultSampler(shPlus);
    pair.algebraEnum = smallEnumeration(sh);
    pair.moduleEnum = smallEnumeration(shPlus);
    return pair;
}

FtcPairInstance zeroMapsPair(const RingDescriptor& ring) {
    FtcPairInstance pair = polynomialPair(ring);
    pair.name = "zero-integration";
    pair.derivation = zeroOperator(pair.algebra, pair.module, "D=0");
    pair.integration = zeroOperator(pair.module, pair.algebra, "P=0");
    return pair;
}

FtcPairInstance zeroModulePair(const RingDescriptor& ring) {
    FtcPairInstance pair = polynomialPair(ring);
    pair.name = "zero-both";
    const CarrierElement z = zeroOf(pair.module);
    pair.derivation = zeroOperator(pair.algebra, pair.module, "D=0");
    pair.integration = zeroOperator(pair.module, pair.algebra, "P=0");
    pair.moduleSampler = [z](SampleRng&) { return z; };
    pair.moduleEnum = {z};
    pair.moduleMembership = [](const CarrierElement& m) { return isZero(m); };
    return pair;
}

FtcPairInstance polyMutatedDerivationPair() {
    FtcPairInstance pair = polynomialPair(RingDescriptor::rationals());
    pair.name = "poly-mutated-derivation";
    const CarrierDescriptor poly = pair.algebra;
    pair.derivation = {"D'", poly, poly, [poly](const CarrierElement& p) {
                           std::map<long, Scalar> m;
                           for (const auto& [d, c] : p.poly().coeffs)
                               if (d >= 1) m.emplace(d - 1, c);  // drops the factor n
                           return makePolynomial(poly, std::move(m));
                       }};
    return pair;
}

FtcPairInstance polyMutatedIntegrationPair() {
    FtcPairInstance pair = polynomialPair(RingDescriptor::rationals());
    pair.name = "poly-mutated-integration";
    const CarrierDescriptor poly = pair.algebra;
    pair.integration = {"P'", poly, poly, [poly](const CarrierElement& p) {
                            std::map<long, Scalar> m;
                            for (const auto& [d, c] : p.poly().coeffs)
                                m.emplace(d + 1, c);  // drops the factor 1/(n+1)
                            return makePolynomial(poly, std::move(m));
                        }};
    return pair;
}

FtcPairInstance polyDerivationZeroIntegrationPair() {
    FtcPairInstance pair = polynomialPair(RingDescriptor::rationals());
    pair.name = "poly-derivation-zero-integration";
    pair.integration = zeroOperator(pair.module, pair.algebra, "P=0");
    return pair;
}

FtcPairInstance hurwitzMutatedDerivationPair() {
    FtcPairInstance pair = hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers()));
    pair.name = "hurwitz-mutated-derivation";
    pair.derivation = identityOperator(pair.algebra, "D'=id");
    return pair;
}

}  // namespace ftczin
