#pragma once

// Deterministic sampling. Every sampled element is a pure function of
// (seed, sample index): law checks derive one SampleRng per index, so reports
// are identical for any evaluation order or worker count.

#include <cstdint>
#include <functional>
#include <vector>

#include "ftczin/element.hpp"

namespace ftczin {

struct SampleRng {
    std::uint64_t state;

    explicit SampleRng(std::uint64_t seed) : state(seed) {}

    // splitmix64
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long intIn(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// Per-sample seed derivation; mixes so that nearby (seed, index) pairs land far apart.
std::uint64_t deriveSampleSeed(std::uint64_t seed, std::uint64_t index);

using Sampler = std::function<CarrierElement(SampleRng&)>;

Scalar sampleScalar(const RingDescriptor& ring, SampleRng& rng);

/// Bounded random element: polynomials with <= 4 terms of degree <= 6, words
/// of length <= 3 with <= 3 terms, Hurwitz support <= 5.
CarrierElement sampleElement(const CarrierDescriptor& desc, SampleRng& rng);

Sampler defaultSampler(const CarrierDescriptor& desc);

/// Small canonical elements used for the exhaustive part of law checks.
std::vector<CarrierElement> smallEnumeration(const CarrierDescriptor& desc);

}  // namespace ftczin
