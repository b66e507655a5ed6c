#include "ftczin/instances.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ftczin {

namespace {

const RingDescriptor Q = RingDescriptor::rationals();

RingDescriptor parseRingName(const std::string& text) {
    if (text == "Q" || text == "rationals") return RingDescriptor::rationals();
    if (text == "Z" || text == "integers") return RingDescriptor::integers();
    if (text.rfind("mod ", 0) == 0)
        return RingDescriptor::modular(Integer(text.substr(4)));
    if (text.rfind("Z/", 0) == 0) return RingDescriptor::modular(Integer(text.substr(2)));
    throw UsageError("unknown ring '" + text + "' (use Q, Z, or 'mod m')");
}

ZinbielInstance polyZinInstance(const CheckConfig& cfg) {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(Q);
    return zinbielFromIntegration(
        "poly-zin", polyIntegration(poly),
        [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); },
        defaultSampler(poly), smallEnumeration(poly), cfg);
}

ZinbielInstance hurwitzZinInstance(const CheckConfig& cfg) {
    const CarrierDescriptor h =
        CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(RingDescriptor::integers()));
    return zinbielFromIntegration(
        "hurwitz-zin", hurwitzRightShiftOp(h),
        [](const CarrierElement& a, const CarrierElement& m) { return hurwitzMul(a, m); },
        defaultSampler(h), smallEnumeration(h), cfg);
}

FtcPairInstance rbFreeInstance(const CheckConfig& cfg, int order = 4,
                               const RingDescriptor& ring = Q) {
    FreeRotaBaxter rb = freeRotaBaxter(StructureTable::powerQuotient(order, ring));
    FtcPairInstance pair = ftcFromIntegration(
        "rb-free", rb.integration,
        [](const CarrierElement& a, const CarrierElement& m) { return mul(a, m); },
        defaultSampler(rb.carrier), smallEnumeration(rb.carrier), cfg);
    return pair;
}

}  // namespace

const std::vector<InstanceInfo>& builtinInstances() {
    static const std::vector<InstanceInfo> table = {
        {"poly-ftc", InstanceKind::Ftc, "Q[x] with d/dx and its antiderivative"},
        {"hurwitz-ftc", InstanceKind::Ftc, "Hurwitz sequences over Z with the shifts"},
        {"hurwitz-ftc-mod2", InstanceKind::Ftc, "Hurwitz sequences over Z/2"},
        {"hurwitz-dual-numbers", InstanceKind::Ftc, "Hurwitz sequences over Q[y]/(y^2)"},
        {"shuffle-ftc", InstanceKind::Ftc, "Sh(V) over Sh+(V), basis 3"},
        {"rb-free", InstanceKind::Ftc, "k x| RB(Q[y]/(y^4)) from the free Rota-Baxter algebra"},
        {"poly-derivation-construction", InstanceKind::Ftc,
         "Q[x] with L(x^n) = n x^n and P = K^-1 on reduced polynomials"},
        {"zero-integration", InstanceKind::Ftc, "D = P = 0 on Q[x]: FTC2 holds, FTC1 fails"},
        {"zero-both", InstanceKind::Ftc, "Q[x] with the zero module"},
        {"poly-mutated-derivation", InstanceKind::Ftc, "planted Leibniz violation"},
        {"poly-mutated-integration", InstanceKind::Ftc, "planted Rota-Baxter violation"},
        {"poly-derivation-zero-integration", InstanceKind::Ftc,
         "planted FTC2 violation at the D.E clause"},
        {"hurwitz-mutated-derivation", InstanceKind::Ftc, "planted Leibniz violation on H(Z)"},
        {"shuffle-zin", InstanceKind::Zin, "Sh+(V) with the half-shuffle, basis 3"},
        {"poly-zin", InstanceKind::Zin, "Q[x] with x^m <| x^n = x^(m+n+1)/(n+1)"},
        {"hurwitz-zin", InstanceKind::Zin, "H(Z) with <| from the right shift"},
        {"shuffle-zin-dropped-summand", InstanceKind::Zin, "planted Zinbiel-identity violation"},
    };
    return table;
}

bool isZinInstanceName(const std::string& name) {
    for (const auto& info : builtinInstances())
        if (info.name == name) return info.kind == InstanceKind::Zin;
    return false;
}

FtcPairInstance buildFtcInstance(const std::string& name, const CheckConfig& cfg) {
    if (name == "poly-ftc") return polynomialPair();
    if (name == "hurwitz-ftc")
        return hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::integers()));
    if (name == "hurwitz-ftc-mod2")
        return hurwitzPair(CarrierDescriptor::scalarRing(RingDescriptor::modular(2)));
    if (name == "hurwitz-dual-numbers")
        return hurwitzPair(CarrierDescriptor::finiteAlgebra(StructureTable::powerQuotient(2, Q)));
    if (name == "shuffle-ftc") return shufflePair(3, Q);
    if (name == "rb-free") return rbFreeInstance(cfg);
    if (name == "poly-derivation-construction")
        return ftcFromDerivation(polyDerivationConstructionInput(Q), cfg, 12);
    if (name == "zero-integration") return zeroMapsPair();
    if (name == "zero-both") return zeroModulePair();
    if (name == "poly-mutated-derivation") return polyMutatedDerivationPair();
    if (name == "poly-mutated-integration") return polyMutatedIntegrationPair();
    if (name == "poly-derivation-zero-integration") return polyDerivationZeroIntegrationPair();
    if (name == "hurwitz-mutated-derivation") return hurwitzMutatedDerivationPair();
    throw UsageError("unknown FTC instance '" + name + "'");
}

ZinbielInstance buildZinInstance(const std::string& name, const CheckConfig& cfg) {
    if (name == "shuffle-zin") return shuffleZinbiel(3, Q);
    if (name == "poly-zin") return polyZinInstance(cfg);
    if (name == "hurwitz-zin") return hurwitzZinInstance(cfg);
    if (name == "shuffle-zin-dropped-summand") return shuffleZinbielDroppedSummand(3, Q);
    throw UsageError("unknown Zinbiel instance '" + name + "'");
}

FtcPairInstance instanceFromSpecJson(const std::string& jsonText, const CheckConfig& cfg,
                                     int defaultDegreeBound) {
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("instance spec is not valid JSON: ") + e.what(), 0);
    }
    const std::string construction = spec.value("construction", "");
    const std::string carrier = spec.value("carrier", "polynomial");
    const RingDescriptor ring = parseRingName(spec.value("ring", "Q"));
    const int degreeBound = spec.value("degreeBound", defaultDegreeBound);
    int quotientOrder = 4;
    if (spec.contains("structureConstants"))
        quotientOrder = spec["structureConstants"].value("powerQuotient", 4);
    CheckConfig buildCfg = cfg;
    if (spec.contains("seed")) buildCfg.seed = spec["seed"].get<std::uint64_t>();

    if (construction == "from-integration") {
        if (carrier == "polynomial") {
            const CarrierDescriptor poly = CarrierDescriptor::polynomial(ring);
            return ftcFromIntegration(
                "from-integration(polynomial," + ring.str() + ")", polyIntegration(poly),
                [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); },
                defaultSampler(poly), smallEnumeration(poly), buildCfg);
        }
        if (carrier == "hurwitz") {
            const CarrierDescriptor h =
                CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(ring));
            return ftcFromIntegration(
                "from-integration(hurwitz," + ring.str() + ")", hurwitzRightShiftOp(h),
                [](const CarrierElement& a, const CarrierElement& m) {
                    return hurwitzMul(a, m);
                },
                defaultSampler(h), smallEnumeration(h), buildCfg);
        }
        if (carrier == "rb-free") {
            FtcPairInstance pair = rbFreeInstance(buildCfg, quotientOrder, ring);
            pair.name = "from-integration(rb-free," + ring.str() + ")";
            return pair;
        }
        throw UsageError("from-integration supports polynomial, hurwitz, rb-free");
    }
    if (construction == "from-derivation") {
        if (carrier != "polynomial")
            throw UsageError("from-derivation supports the polynomial carrier");
        DerivationConstructionInput in = polyDerivationConstructionInput(ring);
        return ftcFromDerivation(in, buildCfg, degreeBound);
    }
    if (construction == "diff-algebra") {
        if (carrier == "polynomial") {
            const CarrierDescriptor poly = CarrierDescriptor::polynomial(ring);
            LinearOperator euler{"euler", poly, poly, [poly](const CarrierElement& p) {
                                     std::map<long, Scalar> m;
                                     for (const auto& [d, c] : p.poly().coeffs)
                                         if (d >= 1)
                                             m.emplace(d,
                                                       c * Scalar::fromInt(d, poly.ring()));
                                     return makePolynomial(poly, std::move(m));
                                 }};
            LinearOperator eval0{"eval0", poly, poly, [poly](const CarrierElement& p) {
                                     auto it = p.poly().coeffs.find(0);
                                     std::map<long, Scalar> m;
                                     if (it != p.poly().coeffs.end()) m.emplace(0, it->second);
                                     return makePolynomial(poly, std::move(m));
                                 }};
            return ftcFromDiffAlgebra("diff-algebra(polynomial," + ring.str() + ")", euler,
                                      eval0, defaultSampler(poly), smallEnumeration(poly),
                                      buildCfg, degreeBound);
        }
        if (carrier == "hurwitz") {
            CarrierDescriptor base = spec.contains("structureConstants")
                                         ? CarrierDescriptor::finiteAlgebra(
                                               StructureTable::powerQuotient(quotientOrder, ring))
                                         : CarrierDescriptor::scalarRing(ring);
            return hurwitzEulerPair(base, buildCfg, degreeBound);
        }
        throw UsageError("diff-algebra supports polynomial and hurwitz carriers");
    }
    throw UsageError("unknown construction '" + construction +
                     "' (use from-integration, from-derivation, diff-algebra)");
}

FtcPairInstance resolveFtcInstance(const std::string& arg, const CheckConfig& cfg,
                                   int defaultDegreeBound) {
    std::string trimmed = arg;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (!trimmed.empty() && trimmed.front() == '{')
        return instanceFromSpecJson(trimmed, cfg, defaultDegreeBound);
    if (trimmed.size() > 5 && trimmed.substr(trimmed.size() - 5) == ".json") {
        std::ifstream in(trimmed);
        if (!in) throw UsageError("cannot open instance spec file " + trimmed);
        std::ostringstream buf;
        buf << in.rdbuf();
        return instanceFromSpecJson(buf.str(), cfg, defaultDegreeBound);
    }
    return buildFtcInstance(trimmed, cfg);
}

}  // namespace ftczin
