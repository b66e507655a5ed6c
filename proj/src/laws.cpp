#include "ftczin/laws.hpp"

#include <json.hpp>

namespace ftczin {

std::string toJsonText(const LawReport& report) {
    nlohmann::json j;
    j["law"] = report.law;
    if (!report.instance.empty()) j["instance"] = report.instance;
    j["status"] = report.statusText();
    j["samples"] = report.samplesTried;
    j["seed"] = report.seed;
    if (report.witness) {
        nlohmann::json w;
        w["inputs"] = nlohmann::json::array();
        for (const auto& [name, value] : report.witness->inputs)
            w["inputs"].push_back({{"name", name}, {"value", value}});
        w["lhs"] = report.witness->lhs;
        w["rhs"] = report.witness->rhs;
        j["witness"] = std::move(w);
    }
    return j.dump();
}

// ---------------------------------------------------------------------------
// Clause runners

namespace {

void recordViolation(LawReport& rep, const std::string& clause,
                     std::vector<std::pair<std::string, std::string>> inputs,
                     const CarrierElement& lhs, const CarrierElement& rhs,
                     std::function<bool()> recheck) {
    rep.holds = false;
    Witness w;
    w.inputs.emplace_back("clause", clause);
    for (auto& p : inputs) w.inputs.push_back(std::move(p));
    w.lhs = toText(lhs);
    w.rhs = toText(rhs);
    w.recheck = std::move(recheck);
    rep.witness = std::move(w);
}

}  // namespace

void runUnaryClause(LawReport& rep, const std::string& clause,
                    const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                    const CheckConfig& cfg, const Eval1& eval) {
    if (!rep.holds) return;
    auto tryOne = [&](const CarrierElement& a) -> bool {
        ++rep.samplesTried;
        auto [lhs, rhs] = eval(a);
        if (lhs == rhs) return true;
        recordViolation(rep, clause, {{"a", toText(a)}}, lhs, rhs, [eval, a]() {
            auto [l, r] = eval(a);
            return !(l == r);
        });
        return false;
    };
    for (const auto& a : enumA)
        if (!tryOne(a)) return;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        if (!tryOne(samplerA(rng))) return;
    }
}

void runBinaryClause(LawReport& rep, const std::string& clause,
                     const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                     const std::vector<CarrierElement>& enumB, const Sampler& samplerB,
                     const CheckConfig& cfg, const Eval2& eval) {
    if (!rep.holds) return;
    auto tryOne = [&](const CarrierElement& a, const CarrierElement& b) -> bool {
        ++rep.samplesTried;
        auto [lhs, rhs] = eval(a, b);
        if (lhs == rhs) return true;
        recordViolation(rep, clause, {{"a", toText(a)}, {"b", toText(b)}}, lhs, rhs,
                        [eval, a, b]() {
                            auto [l, r] = eval(a, b);
                            return !(l == r);
                        });
        return false;
    };
    for (const auto& a : enumA)
        for (const auto& b : enumB)
            if (!tryOne(a, b)) return;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        CarrierElement a = samplerA(rng);
        CarrierElement b = samplerB(rng);
        if (!tryOne(a, b)) return;
    }
}

void runTernaryClause(LawReport& rep, const std::string& clause,
                      const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                      const std::vector<CarrierElement>& enumB, const Sampler& samplerB,
                      const std::vector<CarrierElement>& enumC, const Sampler& samplerC,
                      const CheckConfig& cfg, const Eval3& eval) {
    if (!rep.holds) return;
    auto tryOne = [&](const CarrierElement& a, const CarrierElement& b,
                      const CarrierElement& c) -> bool {
        ++rep.samplesTried;
        auto [lhs, rhs] = eval(a, b, c);
        if (lhs == rhs) return true;
        recordViolation(rep, clause, {{"a", toText(a)}, {"b", toText(b)}, {"c", toText(c)}}, lhs,
                        rhs, [eval, a, b, c]() {
                            auto [l, r] = eval(a, b, c);
                            return !(l == r);
                        });
        return false;
    };
    for (const auto& a : enumA)
        for (const auto& b : enumB)
            for (const auto& c : enumC)
                if (!tryOne(a, b, c)) return;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        CarrierElement a = samplerA(rng);
        CarrierElement b = samplerB(rng);
        CarrierElement c = samplerC(rng);
        if (!tryOne(a, b, c)) return;
    }
}

// ---------------------------------------------------------------------------
// The five laws

LawReport checkLeibniz(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "leibniz", .instance = pair.name, .seed = cfg.seed};
    const auto D = pair.derivation.map;
    const auto act = pair.action;
    runBinaryClause(rep, "D(ab) = aD(b) + bD(a)", pair.algebraEnum, pair.algebraSampler,
                    pair.algebraEnum, pair.algebraSampler, cfg,
                    [D, act](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(D(mul(a, b)), add(act(a, D(b)), act(b, D(a))));
                    });
    return rep;
}

LawReport checkRotaBaxter(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "rota-baxter", .instance = pair.name, .seed = cfg.seed};
    const auto P = pair.integration.map;
    const auto act = pair.action;
    runBinaryClause(rep, "P(m)P(n) = P(P(m)n) + P(P(n)m)", pair.moduleEnum, pair.moduleSampler,
                    pair.moduleEnum, pair.moduleSampler, cfg,
                    [P, act](const CarrierElement& m, const CarrierElement& n) {
                        return std::pair(mul(P(m), P(n)),
                                         add(P(act(P(m), n)), P(act(P(n), m))));
                    });
    return rep;
}

LawReport checkFtc1(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "ftc1", .instance = pair.name, .seed = cfg.seed};
    const auto D = pair.derivation.map;
    const auto P = pair.integration.map;
    runUnaryClause(rep, "D(P(m)) = m", pair.moduleEnum, pair.moduleSampler, cfg,
                   [D, P](const CarrierElement& m) { return std::pair(D(P(m)), m); });
    return rep;
}

LinearOperator constantProjector(const FtcPairInstance& pair) {
    const auto D = pair.derivation.map;
    const auto P = pair.integration.map;
    return {"E", pair.algebra, pair.algebra,
            [D, P](const CarrierElement& a) { return sub(a, P(D(a))); }};
}

Membership kerDFixedPoints(const LinearOperator& E) {
    return [Em = E.map](const CarrierElement& a) { return Em(a) == a; };
}

Membership kerEAnnihilated(const LinearOperator& E) {
    return [Em = E.map](const CarrierElement& x) { return isZero(Em(x)); };
}

LawReport checkFtc2(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "ftc2", .instance = pair.name, .seed = cfg.seed};
    const auto E = constantProjector(pair).map;
    const auto D = pair.derivation.map;
    const CarrierElement one = oneOf(pair.algebra);
    const CarrierElement zeroM = zeroOf(pair.module);

    runUnaryClause(rep, "E(1) = 1", {one}, pair.algebraSampler, {cfg.seed, 0},
                   [E, one](const CarrierElement&) -> std::pair<CarrierElement, CarrierElement> {
                       return {E(one), one};
                   });
    runUnaryClause(rep, "E(E(a)) = E(a)", pair.algebraEnum, pair.algebraSampler, cfg,
                   [E](const CarrierElement& a) { return std::pair(E(E(a)), E(a)); });
    runBinaryClause(rep, "E(ab) = E(a)E(b)", pair.algebraEnum, pair.algebraSampler,
                    pair.algebraEnum, pair.algebraSampler, cfg,
                    [E](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(E(mul(a, b)), mul(E(a), E(b)));
                    });
    runUnaryClause(rep, "D(E(a)) = 0", pair.algebraEnum, pair.algebraSampler, cfg,
                   [E, D, zeroM](const CarrierElement& a) { return std::pair(D(E(a)), zeroM); });
    return rep;
}

LawReport checkHybridRotaBaxter(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "hybrid-rb", .instance = pair.name, .seed = cfg.seed};
    const auto D = pair.derivation.map;
    const auto P = pair.integration.map;
    runBinaryClause(
        rep, "P(D(a))P(D(b)) + P(D(ab)) = aP(D(b)) + bP(D(a))", pair.algebraEnum,
        pair.algebraSampler, pair.algebraEnum, pair.algebraSampler, cfg,
        [D, P](const CarrierElement& a, const CarrierElement& b) {
            CarrierElement pda = P(D(a));
            CarrierElement pdb = P(D(b));
            return std::pair(add(mul(pda, pdb), P(D(mul(a, b)))),
                             add(mul(a, pdb), mul(b, pda)));
        });
    runUnaryClause(rep, "D(P(D(a))) = D(a)", pair.algebraEnum, pair.algebraSampler, cfg,
                   [D, P](const CarrierElement& a) { return std::pair(D(P(D(a))), D(a)); });
    return rep;
}

LawReport checkFtc2Equivalence(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "ftc2-equivalence", .instance = pair.name, .seed = cfg.seed};
    LawReport viaE = checkFtc2(pair, cfg);
    LawReport viaHybrid = checkHybridRotaBaxter(pair, cfg);
    rep.samplesTried = viaE.samplesTried + viaHybrid.samplesTried;
    if (viaE.holds != viaHybrid.holds) {
        rep.holds = false;
        Witness w;
        w.inputs.emplace_back("clause", "E-criterion verdict = hybrid-rule verdict");
        w.inputs.emplace_back("E-criterion", viaE.statusText());
        w.inputs.emplace_back("hybrid-rule", viaHybrid.statusText());
        w.lhs = viaE.statusText();
        w.rhs = viaHybrid.statusText();
        w.recheck = [pair, cfg]() {
            return checkFtc2(pair, cfg).holds != checkHybridRotaBaxter(pair, cfg).holds;
        };
        rep.witness = std::move(w);
    }
    return rep;
}

LawReport checkAugmented(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "augmented", .instance = pair.name, .seed = cfg.seed};
    const auto E = constantProjector(pair).map;
    auto tryOne = [&](const CarrierElement& a) -> bool {
        ++rep.samplesTried;
        CarrierElement img = E(a);
        if (asScalarMultipleOfOne(img)) return true;
        rep.holds = false;
        Witness w;
        w.inputs.emplace_back("clause", "E(a) = e(a).1");
        w.inputs.emplace_back("a", toText(a));
        w.lhs = toText(img);
        w.rhs = "c*1 for a scalar c";
        w.recheck = [E, a]() { return !asScalarMultipleOfOne(E(a)).has_value(); };
        rep.witness = std::move(w);
        return false;
    };
    for (const auto& a : pair.algebraEnum)
        if (!tryOne(a)) return rep;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        SampleRng rng(deriveSampleSeed(cfg.seed, i));
        if (!tryOne(pair.algebraSampler(rng))) return rep;
    }
    return rep;
}

LawReport checkKerDLinearity(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "kerd-linearity", .instance = pair.name, .seed = cfg.seed};
    const auto E = constantProjector(pair).map;
    const auto P = pair.integration.map;
    const auto act = pair.action;
    runBinaryClause(rep, "P(cm) = cP(m) for c = E(a)", pair.algebraEnum, pair.algebraSampler,
                    pair.moduleEnum, pair.moduleSampler, cfg,
                    [E, P, act](const CarrierElement& a, const CarrierElement& m) {
                        CarrierElement c = E(a);
                        return std::pair(P(act(c, m)), mul(c, P(m)));
                    });
    return rep;
}

LawReport checkActionLaws(const FtcPairInstance& pair, const CheckConfig& cfg) {
    LawReport rep{.law = "action-laws", .instance = pair.name, .seed = cfg.seed};
    const auto act = pair.action;
    const CarrierElement one = oneOf(pair.algebra);
    runUnaryClause(rep, "1m = m", pair.moduleEnum, pair.moduleSampler, cfg,
                   [act, one](const CarrierElement& m) { return std::pair(act(one, m), m); });
    runTernaryClause(rep, "(ab)m = a(bm)", pair.algebraEnum, pair.algebraSampler,
                     pair.algebraEnum, pair.algebraSampler, pair.moduleEnum, pair.moduleSampler,
                     cfg,
                     [act](const CarrierElement& a, const CarrierElement& b,
                           const CarrierElement& m) {
                         return std::pair(act(mul(a, b), m), act(a, act(b, m)));
                     });
    runTernaryClause(rep, "a(m+n) = am + an", pair.algebraEnum, pair.algebraSampler,
                     pair.moduleEnum, pair.moduleSampler, pair.moduleEnum, pair.moduleSampler,
                     cfg,
                     [act](const CarrierElement& a, const CarrierElement& m,
                           const CarrierElement& n) {
                         return std::pair(act(a, add(m, n)), add(act(a, m), act(a, n)));
                     });
    return rep;
}

std::vector<LawReport> checkAllLaws(const FtcPairInstance& pair, const CheckConfig& cfg) {
    return {checkLeibniz(pair, cfg), checkRotaBaxter(pair, cfg), checkFtc1(pair, cfg),
            checkFtc2(pair, cfg), checkHybridRotaBaxter(pair, cfg)};
}

LawReport checkOperatorLinearity(const LinearOperator& op, const Sampler& domainSampler,
                                 const std::vector<CarrierElement>& domainEnum,
                                 const CheckConfig& cfg) {
    LawReport rep{.law = "linearity(" + op.name + ")", .seed = cfg.seed};
    const auto f = op.map;
    runBinaryClause(rep, "f(x+y) = f(x)+f(y)", domainEnum, domainSampler, domainEnum,
                    domainSampler, cfg, [f](const CarrierElement& x, const CarrierElement& y) {
                        return std::pair(f(add(x, y)), add(f(x), f(y)));
                    });
    const CarrierDescriptor scalars = CarrierDescriptor::scalarRing(op.domain.ring());
    runBinaryClause(rep, "f(cx) = cf(x)", domainEnum, domainSampler, smallEnumeration(scalars),
                    defaultSampler(scalars), cfg,
                    [f](const CarrierElement& x, const CarrierElement& cElem) {
                        const Scalar& c = cElem.scalar();
                        return std::pair(f(scalarMul(c, x)), scalarMul(c, f(x)));
                    });
    return rep;
}

LawReport checkFtcMorphism(const FtcMorphism& m, const FtcPairInstance& src,
                           const FtcPairInstance& dst, const CheckConfig& cfg) {
    LawReport rep{.law = "ftc-morphism(" + m.name + ")", .instance = src.name, .seed = cfg.seed};
    const auto f = m.f.map;
    const auto g = m.g.map;
    const auto D = src.derivation.map;
    const auto P = src.integration.map;
    const auto B = dst.derivation.map;
    const auto Q = dst.integration.map;
    const auto actSrc = src.action;
    const auto actDst = dst.action;
    const CarrierElement one = oneOf(src.algebra);
    const CarrierElement oneDst = oneOf(dst.algebra);

    runUnaryClause(rep, "f(1) = 1", {one}, src.algebraSampler, {cfg.seed, 0},
                   [f, one, oneDst](const CarrierElement&)
                       -> std::pair<CarrierElement, CarrierElement> { return {f(one), oneDst}; });
    runBinaryClause(rep, "f(ab) = f(a)f(b)", src.algebraEnum, src.algebraSampler, src.algebraEnum,
                    src.algebraSampler, cfg,
                    [f](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(f(mul(a, b)), mul(f(a), f(b)));
                    });
    runBinaryClause(rep, "g(am) = f(a)g(m)", src.algebraEnum, src.algebraSampler, src.moduleEnum,
                    src.moduleSampler, cfg,
                    [f, g, actSrc, actDst](const CarrierElement& a, const CarrierElement& mm) {
                        return std::pair(g(actSrc(a, mm)), actDst(f(a), g(mm)));
                    });
    runUnaryClause(rep, "g(D(a)) = B(f(a))", src.algebraEnum, src.algebraSampler, cfg,
                   [f, g, D, B](const CarrierElement& a) { return std::pair(g(D(a)), B(f(a))); });
    runUnaryClause(rep, "f(P(m)) = Q(g(m))", src.moduleEnum, src.moduleSampler, cfg,
                   [f, g, P, Q](const CarrierElement& mm) {
                       return std::pair(f(P(mm)), Q(g(mm)));
                   });
    return rep;
}

}  // namespace ftczin
