#pragma once

// The equivalence FTC ~ ZIN: functor F sends a pair to (ker(D), M) with
// m <|_P n = P(n)m, functor G sends (A, Z) to (A x| Z <=> Z) with the
// projection and injection, and eta / epsilon are the natural isomorphisms.
// ker(D) is never enumerated: it is represented by the projector E, with
// membership E(a) = a and sampling through E.

#include "ftczin/zinbiel.hpp"

namespace ftczin {

struct KernelSubalgebra {
    CarrierDescriptor ambient;
    LinearOperator projector;  // E, validated idempotent/unital/multiplicative upstream

    bool contains(const CarrierElement& a) const { return projector.map(a) == a; }
};

/// F(A <=> M) = (ker(D), M). Validates the five laws first; throws
/// InvalidInstanceError carrying the failing reports.
ZinbielInstance functorF(const FtcPairInstance& pair, const CheckConfig& cfg);

/// F(f,g) = (f restricted to ker(D), g). Checks the morphism laws and that
/// the restriction lands in the target kernel (RestrictionError otherwise).
ZinMorphism functorFMap(const FtcMorphism& m, const FtcPairInstance& src,
                        const FtcPairInstance& dst, const CheckConfig& cfg);

/// G(A, Z) = (A x| Z <=> Z) with D = pi_Z and P = iota_Z. Validates the
/// Zinbiel identity and bilinearity first.
FtcPairInstance functorG(const ZinbielInstance& zin, const CheckConfig& cfg);

/// G(f,g) = (f x| g, g) between already-built G-images.
FtcMorphism functorGMap(const ZinMorphism& m, const ZinbielInstance& srcZin,
                        const ZinbielInstance& dstZin, const FtcPairInstance& gSrc,
                        const FtcPairInstance& gDst, const CheckConfig& cfg);

// ---------------------------------------------------------------------------
// Round-trip bundles: the functor images and natural-isomorphism components
// for one object, built once and reused by the checks.

struct FtcRoundtrip {
    FtcPairInstance pair;  // the original pair
    ZinbielInstance F;     // F(pair)
    FtcPairInstance GF;    // G(F(pair))
    FtcMorphism eta;       // pair -> GF: eta1(a) = (E(a), D(a)), eta2 = id
    FtcMorphism etaInv;    // GF -> pair: eta1^-1(c, m) = c + P(m)
};

struct ZinRoundtrip {
    ZinbielInstance zin;   // the original instance
    FtcPairInstance G;     // G(zin)
    ZinbielInstance FG;    // F(G(zin)) with base ker(pi_Z) = {(a, 0)}
    ZinMorphism epsilon;     // FG -> zin: eps1(a, 0) = a, eps2 = id
    ZinMorphism epsilonInv;  // zin -> FG: eps1^-1(a) = (a, 0)
};

FtcRoundtrip buildFtcRoundtrip(const FtcPairInstance& pair, const CheckConfig& cfg);
ZinRoundtrip buildZinRoundtrip(const ZinbielInstance& zin, const CheckConfig& cfg);

/// eta_inv . eta = id_A and eta . eta_inv = id on ker(D) x| M, exact.
LawReport checkRoundtripFtc(const FtcRoundtrip& rt, const CheckConfig& cfg);
/// The epsilon round trips on F(G(zin)) and zin.
LawReport checkRoundtripZin(const ZinRoundtrip& rt, const CheckConfig& cfg);

/// G(F(f,g)) . eta_src = eta_dst . (f,g), evaluated pointwise.
LawReport checkNaturalityFtc(const FtcMorphism& m, const FtcRoundtrip& src,
                             const FtcRoundtrip& dst, const CheckConfig& cfg);
/// epsilon_dst . F(G(f,g)) = (f,g) . epsilon_src, evaluated pointwise.
LawReport checkNaturalityZin(const ZinMorphism& m, const ZinRoundtrip& src,
                             const ZinRoundtrip& dst, const CheckConfig& cfg);

// k x| Sh+(V) ~ Sh(V): the iso (c, t) -> c.1 + t and its inverse.
struct ShuffleIso {
    ZinbielInstance zin;          // Sh+(V) as a k-Zinbiel algebra
    FtcPairInstance semidirect;   // G(k, Sh+(V))
    FtcPairInstance shuffle;      // the shuffle pair from the corpus
    FtcMorphism iso;              // semidirect -> shuffle
    FtcMorphism isoInv;           // shuffle -> semidirect
};
ShuffleIso shuffleIso(int basisSize, const RingDescriptor& ring, const CheckConfig& cfg);

/// The augmented-pair verdict must match "F's base lies in k.1".
LawReport checkAugmentedCorrespondence(const FtcPairInstance& pair, const CheckConfig& cfg);
/// For a k-Zinbiel instance, G(k, Z) must report augmented.
LawReport checkAugmentedCorrespondenceZin(const ZinbielInstance& zin, const CheckConfig& cfg);

}  // namespace ftczin
