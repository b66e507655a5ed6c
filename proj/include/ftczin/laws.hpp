#pragma once

// The law-checking engine. Every equational law of the calculus is checked
// exactly on an exhaustive small enumeration plus seeded samples; "holds"
// always means holds-on-the-tested-set. A violated report carries a witness
// whose recheck() re-evaluates the law on the stored inputs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftczin/ftc_pair.hpp"

namespace ftczin {

struct Witness {
    std::vector<std::pair<std::string, std::string>> inputs;  // name -> canonical text
    std::string lhs;
    std::string rhs;
    std::function<bool()> recheck;  // true iff the inequality reproduces
};

struct LawReport {
    std::string law;
    std::string instance;
    bool holds = true;
    std::optional<Witness> witness;
    std::size_t samplesTried = 0;
    std::uint64_t seed = 0;

    std::string statusText() const { return holds ? "holds-on-samples" : "violated"; }
};

/// JSON with fields {law, status, witness?, samples, seed} (+ instance when set).
std::string toJsonText(const LawReport& report);

struct CheckConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
};

// Construction-time validation failure; carries the offending reports.
struct InvalidInstanceError : Error {
    std::vector<LawReport> reports;
    InvalidInstanceError(const std::string& msg, std::vector<LawReport> reps)
        : Error(msg), reports(std::move(reps)) {}
};

// ---------------------------------------------------------------------------
// The five FTC laws plus their companions.

LawReport checkLeibniz(const FtcPairInstance& pair, const CheckConfig& cfg);
LawReport checkRotaBaxter(const FtcPairInstance& pair, const CheckConfig& cfg);
LawReport checkFtc1(const FtcPairInstance& pair, const CheckConfig& cfg);
/// FTC2 via the E-criterion: E idempotent unital multiplicative, D.E = 0.
LawReport checkFtc2(const FtcPairInstance& pair, const CheckConfig& cfg);
/// The hybrid Rota-Baxter rule together with D.P.D = D.
LawReport checkHybridRotaBaxter(const FtcPairInstance& pair, const CheckConfig& cfg);
/// Metamorphic: the E-criterion and hybrid-rule verdicts must agree.
LawReport checkFtc2Equivalence(const FtcPairInstance& pair, const CheckConfig& cfg);
/// E lands in k.1; extracts the augmentation value per tested element.
LawReport checkAugmented(const FtcPairInstance& pair, const CheckConfig& cfg);
/// P(c m) = c P(m) for c in the image of E.
LawReport checkKerDLinearity(const FtcPairInstance& pair, const CheckConfig& cfg);
/// Module action is unital and associative.
LawReport checkActionLaws(const FtcPairInstance& pair, const CheckConfig& cfg);

/// leibniz, rota-baxter, ftc1, ftc2, hybrid-rb in that order.
std::vector<LawReport> checkAllLaws(const FtcPairInstance& pair, const CheckConfig& cfg);

/// Additivity and scalar homogeneity of an operator, sampled on its domain.
LawReport checkOperatorLinearity(const LinearOperator& op, const Sampler& domainSampler,
                                 const std::vector<CarrierElement>& domainEnum,
                                 const CheckConfig& cfg);

// ---------------------------------------------------------------------------
// Maps of FTC-pairs.

struct FtcMorphism {
    std::string name;
    LinearOperator f;  // algebra component A -> C
    LinearOperator g;  // module component M -> N
};

/// f unital + multiplicative, g(am) = f(a)g(m), g.D = B.f, f.P = Q.g.
LawReport checkFtcMorphism(const FtcMorphism& m, const FtcPairInstance& src,
                           const FtcPairInstance& dst, const CheckConfig& cfg);

// ---------------------------------------------------------------------------
// Clause runners shared with the Zinbiel checks (exhaustive enumeration
// followed by seeded samples; first violation wins).

using Eval1 = std::function<std::pair<CarrierElement, CarrierElement>(const CarrierElement&)>;
using Eval2 = std::function<std::pair<CarrierElement, CarrierElement>(const CarrierElement&,
                                                                      const CarrierElement&)>;
using Eval3 = std::function<std::pair<CarrierElement, CarrierElement>(
    const CarrierElement&, const CarrierElement&, const CarrierElement&)>;

void runUnaryClause(LawReport& rep, const std::string& clause,
                    const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                    const CheckConfig& cfg, const Eval1& eval);
void runBinaryClause(LawReport& rep, const std::string& clause,
                     const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                     const std::vector<CarrierElement>& enumB, const Sampler& samplerB,
                     const CheckConfig& cfg, const Eval2& eval);
void runTernaryClause(LawReport& rep, const std::string& clause,
                      const std::vector<CarrierElement>& enumA, const Sampler& samplerA,
                      const std::vector<CarrierElement>& enumB, const Sampler& samplerB,
                      const std::vector<CarrierElement>& enumC, const Sampler& samplerC,
                      const CheckConfig& cfg, const Eval3& eval);

}  // namespace ftczin
