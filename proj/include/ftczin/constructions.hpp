#pragma once

// Factories for FTC-pairs: from an integration via k x| M, from a derivation
// via L = D*.D and K = L + E with P = K^-1 on ker(E), and the differential
// algebra corollary with K = D + E. The free Rota-Baxter algebra RB(A) feeds
// the first factory. K is inverted degreewise on graded carriers by exact
// linear solves up to a configured degree bound.

#include "ftczin/equivalence.hpp"

namespace ftczin {

// ---------------------------------------------------------------------------
// Graded structure. A carrier is graded when it decomposes into finite
// dimensional pieces indexed by a degree (polynomial degree, Hurwitz index,
// word length); the grading drives the degreewise inversion of K.

bool isGraded(const CarrierDescriptor& desc);
std::vector<CarrierElement> gradedBasis(const CarrierDescriptor& desc, int degree);
/// Coordinates of x against gradedBasis, per degree; only nonzero degrees appear.
std::map<int, std::vector<Scalar>> gradedCoordinates(const CarrierElement& x);

/// Degreewise exact inverse of K up to the bound. Gaussian elimination with
/// unit pivots where possible, falling back to the adjugate formula (total
/// over any commutative coefficient ring). NotInvertibleError names the
/// singular degree; evaluating the result beyond the bound raises
/// DegreeBoundError.
LinearOperator invertKGraded(const LinearOperator& K, int degreeBound);

// Exposed for the oracle cross-checks in tests.
using ScalarMatrix = std::vector<std::vector<Scalar>>;
std::optional<ScalarMatrix> gaussianInverse(ScalarMatrix m, const RingDescriptor& ring);
ScalarMatrix adjugateInverse(const ScalarMatrix& m, const RingDescriptor& ring);

// ---------------------------------------------------------------------------
// Factories.

/// Lemma: any integration P: M -> A yields the augmented pair k x| M <=> M.
FtcPairInstance ftcFromIntegration(std::string name, const LinearOperator& P,
                                   const Action& action, const Sampler& moduleSampler,
                                   const std::vector<CarrierElement>& moduleEnum,
                                   const CheckConfig& cfg);

/// RB(A) = Sh+(A) under the augmented mixable shuffle, with P prepending the
/// unit letter; the free commutative Rota-Baxter algebra over A.
struct FreeRotaBaxter {
    CarrierDescriptor carrier;
    LinearOperator integration;
};
FreeRotaBaxter freeRotaBaxter(std::shared_ptr<const StructureTable> letters);

struct DerivationConstructionInput {
    std::string name;
    CarrierDescriptor algebra;  // A
    CarrierDescriptor module;   // M
    Action action;              // A x M -> M
    LinearOperator D;           // derivation A -> M
    LinearOperator Dcirc;       // A-linear M -> A
    LinearOperator E;           // idempotent algebra morphism A -> A
    std::optional<LinearOperator> Kinverse;  // closed form, when available
    Sampler algebraSampler;
    Sampler moduleSampler;
    std::vector<CarrierElement> algebraEnum;
    std::vector<CarrierElement> moduleEnum;
};

/// Lemma: with L = D*.D and K = L + E an isomorphism, (A <=> ker(E)) is an
/// FTC-pair with derivation L and integration K^-1.
FtcPairInstance ftcFromDerivation(const DerivationConstructionInput& input,
                                  const CheckConfig& cfg, int degreeBound = 12);

/// Corollary: for a differential algebra, L = D and K = D + E.
FtcPairInstance ftcFromDiffAlgebra(std::string name, const LinearOperator& D,
                                   const LinearOperator& E, const Sampler& algebraSampler,
                                   const std::vector<CarrierElement>& algebraEnum,
                                   const CheckConfig& cfg, int degreeBound = 12);

// Canned instances of the constructions.
/// k[x] with D* = multiplication by x and E = evaluation at zero.
DerivationConstructionInput polyDerivationConstructionInput(const RingDescriptor& ring);
/// H(A) with the index-scaling Euler derivation and the head projector.
FtcPairInstance hurwitzEulerPair(const CarrierDescriptor& base, const CheckConfig& cfg,
                                 int degreeBound = 12);

}  // namespace ftczin
