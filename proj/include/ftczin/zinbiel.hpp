#pragma once

// Zinbiel algebras: (A, Z, <|) with the Zinbiel identity
// (x <| y) <| z = x <| (y <| z) + x <| (z <| y), the symmetrized product,
// the <|_P construction from an integration, and morphism checks.

#include "ftczin/laws.hpp"

namespace ftczin {

struct ZinbielInstance {
    std::string name;
    CarrierDescriptor base;     // A
    CarrierDescriptor carrier;  // Z
    Action action;              // A x Z -> Z
    Action zin;                 // <| : Z x Z -> Z
    Sampler baseSampler;
    Sampler carrierSampler;
    std::vector<CarrierElement> baseEnum;
    std::vector<CarrierElement> carrierEnum;
    Membership baseMembership;  // null when the base is the whole carrier
};

/// x *<| y = x <| y + y <| x.
CarrierElement symmetrizedProduct(const ZinbielInstance& z, const CarrierElement& x,
                                  const CarrierElement& y);

/// Sh+(V) with x <| y = x0 (x) (tail(x) sh y), a k-Zinbiel algebra.
ZinbielInstance shuffleZinbiel(int basisSize, const RingDescriptor& ring);

/// Mutation: <| with the tail shuffle replaced by concatenation, so one
/// family of interleavings is dropped; breaks the Zinbiel identity.
ZinbielInstance shuffleZinbielDroppedSummand(int basisSize, const RingDescriptor& ring);

/// m <|_P n = P(n) m over the base ring k. Validates the Rota-Baxter rule for
/// P first and throws InvalidInstanceError carrying the report when it fails.
ZinbielInstance zinbielFromIntegration(std::string name, const LinearOperator& P,
                                       const Action& action, const Sampler& moduleSampler,
                                       const std::vector<CarrierElement>& moduleEnum,
                                       const CheckConfig& cfg);

LawReport checkZinbielIdentity(const ZinbielInstance& z, const CheckConfig& cfg);
/// c(x <| y) = (cx) <| y = x <| (cy) for base elements c.
LawReport checkBilinearity(const ZinbielInstance& z, const CheckConfig& cfg);

struct ZinMorphism {
    std::string name;
    LinearOperator f;  // A -> A'
    LinearOperator g;  // Z -> Z'
};

/// f unital + multiplicative, g(ax) = f(a)g(x), g(x <| y) = g(x) <| g(y).
LawReport checkZinMorphism(const ZinMorphism& m, const ZinbielInstance& src,
                           const ZinbielInstance& dst, const CheckConfig& cfg);

}  // namespace ftczin
