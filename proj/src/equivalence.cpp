#include "ftczin/equivalence.hpp"

namespace ftczin {

namespace {

std::vector<LawReport> failingReports(std::vector<LawReport> reports) {
    std::vector<LawReport> bad;
    for (auto& r : reports)
        if (!r.holds) bad.push_back(std::move(r));
    return bad;
}

void dedupPush(std::vector<CarrierElement>& v, CarrierElement e) {
    for (const auto& x : v)
        if (x == e) return;
    v.push_back(std::move(e));
}

}  // namespace

ZinbielInstance functorF(const FtcPairInstance& pair, const CheckConfig& cfg) {
    auto bad = failingReports(checkAllLaws(pair, cfg));
    if (!bad.empty())
        throw InvalidInstanceError("functor F needs an FTC-pair; laws fail on " + pair.name,
                                   std::move(bad));
    KernelSubalgebra kernel{pair.algebra, constantProjector(pair)};
    const auto Em = kernel.projector.map;
    const auto Pm = pair.integration.map;
    const auto act = pair.action;

    ZinbielInstance z;
    z.name = "F(" + pair.name + ")";
    z.base = kernel.ambient;
    z.carrier = pair.module;
    z.action = act;
    z.zin = [Pm, act](const CarrierElement& m, const CarrierElement& n) {
        return act(Pm(n), m);  // m <|_P n = P(n) m
    };
    z.baseMembership = [kernel](const CarrierElement& a) { return kernel.contains(a); };
    z.baseSampler = [Em, s = pair.algebraSampler](SampleRng& rng) { return Em(s(rng)); };
    for (const auto& a : pair.algebraEnum) dedupPush(z.baseEnum, Em(a));
    z.carrierSampler = pair.moduleSampler;
    z.carrierEnum = pair.moduleEnum;
    return z;
}

ZinMorphism functorFMap(const FtcMorphism& m, const FtcPairInstance& src,
                        const FtcPairInstance& dst, const CheckConfig& cfg) {
    LawReport morph = checkFtcMorphism(m, src, dst, cfg);
    if (!morph.holds)
        throw InvalidInstanceError("functor F on a non-morphism " + m.name, {morph});
    // The restriction of f to ker(D) must land in ker(B); g D = B f makes this
    // automatic for true morphisms, but verify on the tested set.
    const auto E = constantProjector(src).map;
    const auto EDst = constantProjector(dst).map;
    const auto f = m.f.map;
    auto checkMember = [&](const CarrierElement& a) {
        CarrierElement c = E(a);
        CarrierElement img = f(c);
        if (!(EDst(img) == img))
            throw RestrictionError("restriction of " + m.f.name + " leaves the target kernel",
                                   toText(c));
    };
    for (const auto& a : src.algebraEnum) checkMember(a);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        checkMember(src.algebraSampler(rng));
    }
    ZinMorphism out;
    out.name = "F(" + m.name + ")";
    out.f = {m.f.name + "|ker", m.f.domain, m.f.codomain, f};
    out.g = m.g;
    return out;
}

FtcPairInstance functorG(const ZinbielInstance& zin, const CheckConfig& cfg) {
    std::vector<LawReport> bad;
    LawReport ident = checkZinbielIdentity(zin, cfg);
    if (!ident.holds) bad.push_back(ident);
    LawReport bilin = checkBilinearity(zin, cfg);
    if (!bilin.holds) bad.push_back(bilin);
    if (!bad.empty())
        throw InvalidInstanceError("functor G needs a Zinbiel instance; laws fail on " + zin.name,
                                   std::move(bad));

    auto spec = std::make_shared<SemidirectSpec>();
    spec->algebra = zin.base;
    spec->module = zin.carrier;
    spec->baseAction = zin.action;
    spec->zin = zin.zin;
    spec->algebraMembership = zin.baseMembership;
    spec->label = zin.base.str() + " x| " + zin.carrier.str();
    const CarrierDescriptor sd = CarrierDescriptor::semidirect(spec);

    FtcPairInstance pair;
    pair.name = "G(" + zin.name + ")";
    pair.algebra = sd;
    pair.module = zin.carrier;
    pair.action = [](const CarrierElement& ax, const CarrierElement& y) {
        return semidirectAction(ax, y);
    };
    pair.derivation = {"pi", sd, zin.carrier,
                       [](const CarrierElement& x) { return x.semi().parts[1]; }};
    pair.integration = {"iota", zin.carrier, sd,
                        [sd, base = zin.base](const CarrierElement& x) {
                            return makeSemidirect(sd, zeroOf(base), x);
                        }};
    pair.algebraSampler = [sd, bs = zin.baseSampler, cs = zin.carrierSampler](SampleRng& rng) {
        return makeSemidirect(sd, bs(rng), cs(rng));
    };
    pair.moduleSampler = zin.carrierSampler;
    pair.moduleEnum = zin.carrierEnum;
    if (hasOne(zin.base)) dedupPush(pair.algebraEnum, oneOf(sd));
    dedupPush(pair.algebraEnum, zeroOf(sd));
    std::size_t used = 0;
    for (const auto& b : zin.baseEnum) {
        dedupPush(pair.algebraEnum, makeSemidirect(sd, b, zeroOf(zin.carrier)));
        if (++used == 3) break;
    }
    used = 0;
    for (const auto& z : zin.carrierEnum) {
        if (isZero(z)) continue;
        dedupPush(pair.algebraEnum, makeSemidirect(sd, zeroOf(zin.base), z));
        if (!zin.baseEnum.empty())
            dedupPush(pair.algebraEnum, makeSemidirect(sd, zin.baseEnum.back(), z));
        if (++used == 2) break;
    }
    return pair;
}

FtcMorphism functorGMap(const ZinMorphism& m, const ZinbielInstance& srcZin,
                        const ZinbielInstance& dstZin, const FtcPairInstance& gSrc,
                        const FtcPairInstance& gDst, const CheckConfig& cfg) {
    LawReport morph = checkZinMorphism(m, srcZin, dstZin, cfg);
    if (!morph.holds)
        throw InvalidInstanceError("functor G on a non-morphism " + m.name, {morph});
    FtcMorphism out;
    out.name = "G(" + m.name + ")";
    out.f = {m.f.name + " x| " + m.g.name, gSrc.algebra, gDst.algebra,
             [sd = gDst.algebra, fm = m.f.map, gm = m.g.map](const CarrierElement& ax) {
                 return makeSemidirect(sd, fm(ax.semi().parts[0]), gm(ax.semi().parts[1]));
             }};
    out.g = m.g;
    return out;
}

FtcRoundtrip buildFtcRoundtrip(const FtcPairInstance& pair, const CheckConfig& cfg) {
    FtcRoundtrip rt;
    rt.pair = pair;
    rt.F = functorF(pair, cfg);
    rt.GF = functorG(rt.F, cfg);
    const auto Em = constantProjector(pair).map;
    const auto Dm = pair.derivation.map;
    const auto Pm = pair.integration.map;
    rt.eta.name = "eta(" + pair.name + ")";
    rt.eta.f = {"eta1", pair.algebra, rt.GF.algebra,
                [sd = rt.GF.algebra, Em, Dm](const CarrierElement& a) {
                    return makeSemidirect(sd, Em(a), Dm(a));  // (a - P(D(a)), D(a))
                }};
    rt.eta.g = identityOperator(pair.module, "eta2");
    rt.etaInv.name = "eta_inv(" + pair.name + ")";
    rt.etaInv.f = {"eta1_inv", rt.GF.algebra, pair.algebra,
                   [Pm](const CarrierElement& cm) {
                       return add(cm.semi().parts[0], Pm(cm.semi().parts[1]));  // c + P(m)
                   }};
    rt.etaInv.g = identityOperator(pair.module, "eta2_inv");
    return rt;
}

ZinRoundtrip buildZinRoundtrip(const ZinbielInstance& zin, const CheckConfig& cfg) {
    ZinRoundtrip rt;
    rt.zin = zin;
    rt.G = functorG(zin, cfg);
    rt.FG = functorF(rt.G, cfg);
    const CarrierDescriptor sd = rt.G.algebra;
    rt.epsilon.name = "epsilon(" + zin.name + ")";
    rt.epsilon.f = {"eps1", sd, zin.base, [](const CarrierElement& a0) {
                        if (!isZero(a0.semi().parts[1]))
                            throw Error("epsilon evaluated outside ker(pi)");
                        return a0.semi().parts[0];
                    }};
    rt.epsilon.g = identityOperator(zin.carrier, "eps2");
    rt.epsilonInv.name = "epsilon_inv(" + zin.name + ")";
    rt.epsilonInv.f = {"eps1_inv", zin.base, sd,
                       [sd, mod = zin.carrier](const CarrierElement& a) {
                           return makeSemidirect(sd, a, zeroOf(mod));
                       }};
    rt.epsilonInv.g = identityOperator(zin.carrier, "eps2_inv");
    return rt;
}

LawReport checkRoundtripFtc(const FtcRoundtrip& rt, const CheckConfig& cfg) {
    LawReport rep{.law = "roundtrip-ftc", .instance = rt.pair.name, .seed = cfg.seed};
    const auto eta1 = rt.eta.f.map;
    const auto eta1Inv = rt.etaInv.f.map;
    runUnaryClause(rep, "eta1_inv(eta1(a)) = a", rt.pair.algebraEnum, rt.pair.algebraSampler, cfg,
                   [eta1, eta1Inv](const CarrierElement& a) {
                       return std::pair(eta1Inv(eta1(a)), a);
                   });
    runUnaryClause(rep, "eta1(eta1_inv(x)) = x", rt.GF.algebraEnum, rt.GF.algebraSampler, cfg,
                   [eta1, eta1Inv](const CarrierElement& x) {
                       return std::pair(eta1(eta1Inv(x)), x);
                   });
    return rep;
}

LawReport checkRoundtripZin(const ZinRoundtrip& rt, const CheckConfig& cfg) {
    LawReport rep{.law = "roundtrip-zin", .instance = rt.zin.name, .seed = cfg.seed};
    const auto eps1 = rt.epsilon.f.map;
    const auto eps1Inv = rt.epsilonInv.f.map;
    runUnaryClause(rep, "eps1(eps1_inv(a)) = a", rt.zin.baseEnum, rt.zin.baseSampler, cfg,
                   [eps1, eps1Inv](const CarrierElement& a) {
                       return std::pair(eps1(eps1Inv(a)), a);
                   });
    runUnaryClause(rep, "eps1_inv(eps1(x)) = x", rt.FG.baseEnum, rt.FG.baseSampler, cfg,
                   [eps1, eps1Inv](const CarrierElement& x) {
                       return std::pair(eps1Inv(eps1(x)), x);
                   });
    // the induced operator on Z agrees with the original: x <|_iota y = x <| y
    runBinaryClause(rep, "x <|_iota y = x <| y", rt.zin.carrierEnum, rt.zin.carrierSampler,
                    rt.zin.carrierEnum, rt.zin.carrierSampler, cfg,
                    [zinFG = rt.FG.zin, zinOrig = rt.zin.zin](const CarrierElement& x,
                                                              const CarrierElement& y) {
                        return std::pair(zinFG(x, y), zinOrig(x, y));
                    });
    return rep;
}

LawReport checkNaturalityFtc(const FtcMorphism& m, const FtcRoundtrip& src,
                             const FtcRoundtrip& dst, const CheckConfig& cfg) {
    LawReport rep{.law = "naturality-ftc(" + m.name + ")",
                  .instance = src.pair.name,
                  .seed = cfg.seed};
    // G(F(f,g)) evaluated mechanically as (c, m) -> (f(c), g(m)), so mutated
    // non-morphisms produce a violation witness instead of a construction
    // error. The eta_2 component is the identity on both sides, so the module
    // square is g = g and only the algebra square is informative.
    const auto fm = m.f.map;
    const auto gm = m.g.map;
    const auto etaSrc = src.eta.f.map;
    const auto etaDst = dst.eta.f.map;
    const CarrierDescriptor sdDst = dst.GF.algebra;
    runUnaryClause(rep, "G(F(f,g)).eta = eta.(f,g) on the algebra", src.pair.algebraEnum,
                   src.pair.algebraSampler, cfg,
                   [fm, gm, etaSrc, etaDst, sdDst](const CarrierElement& a) {
                       CarrierElement em = etaSrc(a);
                       CarrierElement lhs = makeSemidirect(sdDst, fm(em.semi().parts[0]),
                                                           gm(em.semi().parts[1]));
                       return std::pair(lhs, etaDst(fm(a)));
                   });
    return rep;
}

LawReport checkNaturalityZin(const ZinMorphism& m, const ZinRoundtrip& src,
                             const ZinRoundtrip& dst, const CheckConfig& cfg) {
    LawReport rep{.law = "naturality-zin(" + m.name + ")",
                  .instance = src.zin.name,
                  .seed = cfg.seed};
    // eps . F(G(f,g)) = (f,g) . eps with F(G(f,g)) = (f x| g restricted, g),
    // evaluated mechanically on the kernel elements (a, 0).
    const auto fm = m.f.map;
    const auto gm = m.g.map;
    const auto epsSrc = src.epsilon.f.map;
    const auto epsDst = dst.epsilon.f.map;
    const CarrierDescriptor sdDst = dst.G.algebra;
    runUnaryClause(rep, "eps.F(G(f,g)) = (f,g).eps on the base", src.FG.baseEnum,
                   src.FG.baseSampler, cfg,
                   [fm, gm, epsSrc, epsDst, sdDst](const CarrierElement& a0) {
                       CarrierElement img = makeSemidirect(sdDst, fm(a0.semi().parts[0]),
                                                           gm(a0.semi().parts[1]));
                       return std::pair(epsDst(img), fm(epsSrc(a0)));
                   });
    return rep;
}

ShuffleIso shuffleIso(int basisSize, const RingDescriptor& ring, const CheckConfig& cfg) {
    ShuffleIso out;
    out.zin = shuffleZinbiel(basisSize, ring);
    out.semidirect = functorG(out.zin, cfg);
    out.shuffle = shufflePair(basisSize, ring);
    const CarrierDescriptor sh = out.shuffle.algebra;
    const CarrierDescriptor shPlus = out.shuffle.module;
    const CarrierDescriptor sd = out.semidirect.algebra;
    const CarrierDescriptor k = CarrierDescriptor::scalarRing(ring);
    out.iso.name = "k x| Sh+ ~ Sh";
    out.iso.f = {"c.1+t", sd, sh, [sh](const CarrierElement& cm) {
                     return makeTensor(sh, cm.semi().parts[1].tensor().words,
                                       cm.semi().parts[0].scalar());
                 }};
    out.iso.g = identityOperator(shPlus, "id");
    out.isoInv.name = "Sh ~ k x| Sh+";
    out.isoInv.f = {"(unit,reduced)", sh, sd, [sd, shPlus, k](const CarrierElement& x) {
                        return makeSemidirect(
                            sd, makeScalar(k, x.tensor().unit),
                            makeTensor(shPlus, x.tensor().words, Scalar::zero(k.ring())));
                    }};
    out.isoInv.g = identityOperator(shPlus, "id");
    return out;
}

LawReport checkAugmentedCorrespondence(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "augmented-correspondence", .instance = pair.name, .seed = cfg.seed};
    LawReport aug = checkAugmented(pair, cfg);
    ZinbielInstance F = functorF(pair, cfg);
    // Does the base of F(pair) lie in k.1?
    bool baseIsK = true;
    std::string outside;
    auto scan = [&](const CarrierElement& c) {
        ++rep.samplesTried;
        if (!asScalarMultipleOfOne(c)) {
            baseIsK = false;
            if (outside.empty()) outside = toText(c);
        }
    };
    for (const auto& c : F.baseEnum) scan(c);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        scan(F.baseSampler(rng));
    }
    if (aug.holds != baseIsK) {
        rep.holds = false;
        Witness w;
        w.inputs.emplace_back("clause", "augmented(pair) iff F-base in k.1");
        w.inputs.emplace_back("augmented", aug.statusText());
        if (!outside.empty()) w.inputs.emplace_back("base element outside k.1", outside);
        w.lhs = aug.holds ? "augmented" : "not augmented";
        w.rhs = baseIsK ? "base in k.1" : "base not in k.1";
        w.recheck = [pair, cfg]() { return true; };
        rep.witness = std::move(w);
    }
    return rep;
}

LawReport checkAugmentedCorrespondenceZin(const ZinbielInstance& zin, const CheckConfig& cfg) {
    LawReport rep{.law = "augmented-correspondence-zin", .instance = zin.name, .seed = cfg.seed};
    if (zin.base.kind() != CarrierKind::Scalar)
        throw UsageError("augmented correspondence needs a k-Zinbiel instance");
    FtcPairInstance g = functorG(zin, cfg);
    LawReport aug = checkAugmented(g, cfg);
    rep.samplesTried = aug.samplesTried;
    rep.holds = aug.holds;
    rep.witness = aug.witness;
    return rep;
}

}  // namespace ftczin
