#pragma once

// FTC-pair instances: an algebra A, an A-module M, the action, a derivation
// D: A -> M and an integration P: M -> A, together with the samplers and
// small enumerations the law checks run on. Builders for the concrete pairs
// live in pairs.cpp.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftczin/operators.hpp"
#include "ftczin/sample.hpp"

namespace ftczin {

using Action = std::function<CarrierElement(const CarrierElement&, const CarrierElement&)>;
using Membership = std::function<bool(const CarrierElement&)>;

struct FtcPairInstance {
    std::string name;
    CarrierDescriptor algebra;
    CarrierDescriptor module;
    Action action;  // A x M -> M
    LinearOperator derivation;   // D: A -> M
    LinearOperator integration;  // P: M -> A
    Sampler algebraSampler;
    Sampler moduleSampler;
    std::vector<CarrierElement> algebraEnum;
    std::vector<CarrierElement> moduleEnum;
    Membership moduleMembership;  // null when the module is the whole carrier
};

// Membership predicates for the two kernels in play; the names keep the two
// readings of "ker" apart (fixed points of E vs elements annihilated by E).
Membership kerDFixedPoints(const LinearOperator& E);
Membership kerEAnnihilated(const LinearOperator& E);

// E(a) = a - P(D(a)); no law is assumed of it here.
LinearOperator constantProjector(const FtcPairInstance& pair);

LinearOperator polyDerivation(const CarrierDescriptor& poly);
LinearOperator polyIntegration(const CarrierDescriptor& poly);
LinearOperator hurwitzLeftShiftOp(const CarrierDescriptor& h);
LinearOperator hurwitzRightShiftOp(const CarrierDescriptor& h);

/// k[x] with D(x^n) = n x^(n-1), P(x^n) = x^(n+1)/(n+1).
FtcPairInstance polynomialPair(const RingDescriptor& ring = RingDescriptor::rationals());
/// H(A) with the left/right shifts under the Hurwitz product.
FtcPairInstance hurwitzPair(const CarrierDescriptor& base);
/// Sh(V) over Sh+(V): D projects out degree >= 1, P is the inclusion.
FtcPairInstance shufflePair(int basisSize, const RingDescriptor& ring);
/// D = 0 and P = 0 on A = M = k[x]: satisfies FTC2, fails FTC1.
FtcPairInstance zeroMapsPair(const RingDescriptor& ring = RingDescriptor::rationals());
/// A = k[x], M = 0: a degenerate but lawful FTC-pair.
FtcPairInstance zeroModulePair(const RingDescriptor& ring = RingDescriptor::rationals());

// Deliberately broken variants (planted law violations).
FtcPairInstance polyMutatedDerivationPair();   // D'(x^n) = x^(n-1): not a derivation
FtcPairInstance polyMutatedIntegrationPair();  // P'(x^n) = x^(n+1): not an integration
FtcPairInstance polyDerivationZeroIntegrationPair();  // (D, 0): fails FTC2 at D.E = 0
FtcPairInstance hurwitzMutatedDerivationPair();       // D = id on H(Z)

}  // namespace ftczin
