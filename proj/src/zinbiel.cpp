#include "ftczin/zinbiel.hpp"

namespace ftczin {

CarrierElement symmetrizedProduct(const ZinbielInstance& z, const CarrierElement& x,
                                  const CarrierElement& y) {
    return add(z.zin(x, y), z.zin(y, x));
}

ZinbielInstance shuffleZinbiel(int basisSize, const RingDescriptor& ring) {
    const CarrierDescriptor k = CarrierDescriptor::scalarRing(ring);
    const CarrierDescriptor shPlus = CarrierDescriptor::tensor(basisSize, true, ring);
    ZinbielInstance z;
    z.name = "shuffle-zin(" + std::to_string(basisSize) + ")";
    z.base = k;
    z.carrier = shPlus;
    z.action = [](const CarrierElement& c, const CarrierElement& x) {
        return scalarMul(c.scalar(), x);
    };
    z.zin = [](const CarrierElement& x, const CarrierElement& y) {
        return shuffleZinbielOp(x, y);
    };
    z.baseSampler = defaultSampler(k);
    z.carrierSampler = defaultSampler(shPlus);
    z.baseEnum = smallEnumeration(k);
    z.carrierEnum = smallEnumeration(shPlus);
    return z;
}

ZinbielInstance shuffleZinbielDroppedSummand(int basisSize, const RingDescriptor& ring) {
    ZinbielInstance z = shuffleZinbiel(basisSize, ring);
    z.name = "shuffle-zin-dropped-summand";
    const CarrierDescriptor shPlus = z.carrier;
    z.zin = [shPlus](const CarrierElement& x, const CarrierElement& y) {
        // x0 (x) (tail(x) . y): concatenation keeps a single interleaving.
        std::map<Word, Scalar> out;
        for (const auto& [wx, cx] : x.tensor().words)
            for (const auto& [wy, cy] : y.tensor().words) {
                Word w = wx;
                w.letters.insert(w.letters.end(), wy.letters.begin(), wy.letters.end());
                auto it = out.find(w);
                if (it == out.end())
                    out.emplace(std::move(w), cx * cy);
                else
                    it->second = it->second + cx * cy;
            }
        return makeTensor(shPlus, std::move(out), Scalar::zero(shPlus.ring()));
    };
    return z;
}

ZinbielInstance zinbielFromIntegration(std::string name, const LinearOperator& P,
                                       const Action& action, const Sampler& moduleSampler,
                                       const std::vector<CarrierElement>& moduleEnum,
                                       const CheckConfig& cfg) {
    // The construction only yields a Zinbiel operator when P satisfies the
    // Rota-Baxter rule; reject invalid integrations with the evidence.
    FtcPairInstance probe;
    probe.name = name;
    probe.algebra = P.codomain;
    probe.module = P.domain;
    probe.action = action;
    probe.derivation = zeroOperator(P.codomain, P.domain);
    probe.integration = P;
    probe.moduleSampler = moduleSampler;
    probe.moduleEnum = moduleEnum;
    probe.algebraSampler = defaultSampler(P.codomain);
    probe.algebraEnum = smallEnumeration(P.codomain);
    LawReport rb = checkRotaBaxter(probe, cfg);
    if (!rb.holds)
        throw InvalidInstanceError("not an integration: Rota-Baxter rule fails for " + P.name,
                                   {rb});

    const CarrierDescriptor k = CarrierDescriptor::scalarRing(P.domain.ring());
    ZinbielInstance z;
    z.name = std::move(name);
    z.base = k;
    z.carrier = P.domain;
    z.action = [](const CarrierElement& c, const CarrierElement& x) {
        return scalarMul(c.scalar(), x);
    };
    z.zin = [Pm = P.map, action](const CarrierElement& m, const CarrierElement& n) {
        return action(Pm(n), m);  // m <|_P n = P(n) m
    };
    z.baseSampler = defaultSampler(k);
    z.carrierSampler = moduleSampler;
    z.baseEnum = smallEnumeration(k);
    z.carrierEnum = moduleEnum;
    return z;
}

LawReport checkZinbielIdentity(const ZinbielInstance& z, const CheckConfig& cfg) {
    LawReport rep{.law = "zinbiel-identity", .instance = z.name, .seed = cfg.seed};
    const auto zin = z.zin;
    runTernaryClause(rep, "(x<|y)<|z = x<|(y<|z) + x<|(z<|y)", z.carrierEnum, z.carrierSampler,
                     z.carrierEnum, z.carrierSampler, z.carrierEnum, z.carrierSampler, cfg,
                     [zin](const CarrierElement& x, const CarrierElement& y,
                           const CarrierElement& c) {
                         return std::pair(zin(zin(x, y), c),
                                          add(zin(x, zin(y, c)), zin(x, zin(c, y))));
                     });
    return rep;
}

LawReport checkBilinearity(const ZinbielInstance& z, const CheckConfig& cfg) {
    LawReport rep{.law = "bilinearity", .instance = z.name, .seed = cfg.seed};
    const auto zin = z.zin;
    const auto act = z.action;
    runTernaryClause(rep, "c(x<|y) = (cx)<|y", z.baseEnum, z.baseSampler, z.carrierEnum,
                     z.carrierSampler, z.carrierEnum, z.carrierSampler, cfg,
                     [zin, act](const CarrierElement& c, const CarrierElement& x,
                                const CarrierElement& y) {
                         return std::pair(act(c, zin(x, y)), zin(act(c, x), y));
                     });
    runTernaryClause(rep, "c(x<|y) = x<|(cy)", z.baseEnum, z.baseSampler, z.carrierEnum,
                     z.carrierSampler, z.carrierEnum, z.carrierSampler, cfg,
                     [zin, act](const CarrierElement& c, const CarrierElement& x,
                                const CarrierElement& y) {
                         return std::pair(act(c, zin(x, y)), zin(x, act(c, y)));
                     });
    runTernaryClause(rep, "(x+y)<|z = x<|z + y<|z and symmetrically", z.carrierEnum,
                     z.carrierSampler, z.carrierEnum, z.carrierSampler, z.carrierEnum,
                     z.carrierSampler, cfg,
                     [zin](const CarrierElement& x, const CarrierElement& y,
                           const CarrierElement& w) {
                         CarrierElement lhs = add(zin(add(x, y), w), zin(w, add(x, y)));
                         CarrierElement rhs = add(add(zin(x, w), zin(y, w)),
                                                  add(zin(w, x), zin(w, y)));
                         return std::pair(lhs, rhs);
                     });
    return rep;
}

LawReport checkZinMorphism(const ZinMorphism& m, const ZinbielInstance& src,
                           const ZinbielInstance& dst, const CheckConfig& cfg) {
    LawReport rep{.law = "zin-morphism(" + m.name + ")", .instance = src.name, .seed = cfg.seed};
    const auto f = m.f.map;
    const auto g = m.g.map;
    const auto zinS = src.zin;
    const auto zinD = dst.zin;
    const auto actS = src.action;
    const auto actD = dst.action;
    const CarrierElement one = oneOf(src.base);
    const CarrierElement oneDst = oneOf(dst.base);

    runUnaryClause(rep, "f(1) = 1", {one}, src.baseSampler, {cfg.seed, 0},
                   [f, one, oneDst](const CarrierElement&)
                       -> std::pair<CarrierElement, CarrierElement> { return {f(one), oneDst}; });
    runBinaryClause(rep, "f(ab) = f(a)f(b)", src.baseEnum, src.baseSampler, src.baseEnum,
                    src.baseSampler, cfg, [f](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(f(mul(a, b)), mul(f(a), f(b)));
                    });
    runBinaryClause(rep, "g(ax) = f(a)g(x)", src.baseEnum, src.baseSampler, src.carrierEnum,
                    src.carrierSampler, cfg,
                    [f, g, actS, actD](const CarrierElement& a, const CarrierElement& x) {
                        return std::pair(g(actS(a, x)), actD(f(a), g(x)));
                    });
    runBinaryClause(rep, "g(x<|y) = g(x)<|g(y)", src.carrierEnum, src.carrierSampler,
                    src.carrierEnum, src.carrierSampler, cfg,
                    [g, zinS, zinD](const CarrierElement& x, const CarrierElement& y) {
                        return std::pair(g(zinS(x, y)), zinD(g(x), g(y)));
                    });
    return rep;
}

}  // namespace ftczin
