#include "ftczin/sample.hpp"

namespace ftczin {

std::uint64_t deriveSampleSeed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 29)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 32);
}

Scalar sampleScalar(const RingDescriptor& ring, SampleRng& rng) {
    switch (ring.tag) {
        case RingTag::Rationals: {
            long num = rng.intIn(-4, 4);
            long den = rng.intIn(1, 4);
            return Scalar::rational(num, den);
        }
        case RingTag::Integers:
            return Scalar::integer(rng.intIn(-4, 4));
        case RingTag::Modular: {
            Integer v = static_cast<long>(rng.below(mpz_get_ui(ring.modulus.get_mpz_t())));
            return Scalar::modular(v, ring.modulus);
        }
    }
    throw Error("unreachable ring tag");
}

static Scalar sampleNonzeroScalar(const RingDescriptor& ring, SampleRng& rng) {
    for (int tries = 0; tries < 16; ++tries) {
        Scalar s = sampleScalar(ring, rng);
        if (!s.isZero()) return s;
    }
    return Scalar::one(ring);
}

CarrierElement sampleElement(const CarrierDescriptor& desc, SampleRng& rng) {
    switch (desc.kind()) {
        case CarrierKind::Scalar:
            return makeScalar(desc, sampleScalar(desc.ring(), rng));
        case CarrierKind::Polynomial: {
            std::map<long, Scalar> m;
            long terms = rng.intIn(0, 4);
            for (long t = 0; t < terms; ++t)
                m.insert_or_assign(rng.intIn(0, 6), sampleScalar(desc.ring(), rng));
            return makePolynomial(desc, std::move(m));
        }
        case CarrierKind::Hurwitz: {
            long support = rng.intIn(0, 5);
            std::vector<CarrierElement> e;
            for (long i = 0; i < support; ++i)
                e.push_back(sampleElement(desc.hurwitzBase(), rng));
            return makeHurwitz(desc, std::move(e));
        }
        case CarrierKind::Tensor: {
            std::map<Word, Scalar> words;
            long terms = rng.intIn(0, 3);
            for (long t = 0; t < terms; ++t) {
                Word w;
                long len = rng.intIn(1, 3);
                for (long i = 0; i < len; ++i)
                    w.letters.push_back(static_cast<int>(rng.below(desc.basisSize())));
                words.insert_or_assign(std::move(w), sampleNonzeroScalar(desc.ring(), rng));
            }
            Scalar unit = Scalar::zero(desc.ring());
            if (!desc.reduced() && rng.below(2)) unit = sampleScalar(desc.ring(), rng);
            return makeTensor(desc, std::move(words), std::move(unit));
        }
        case CarrierKind::Finite: {
            std::map<std::size_t, Scalar> m;
            for (std::size_t i = 0; i < desc.table()->size(); ++i)
                if (rng.below(2)) m.insert_or_assign(i, sampleScalar(desc.ring(), rng));
            return makeFinite(desc, std::move(m));
        }
        case CarrierKind::Semidirect:
            return makeSemidirect(desc, sampleElement(desc.semi().algebra, rng),
                                  sampleElement(desc.semi().module, rng));
    }
    throw Error("unreachable carrier kind");
}

Sampler defaultSampler(const CarrierDescriptor& desc) {
    return [desc](SampleRng& rng) { return sampleElement(desc, rng); };
}

std::vector<CarrierElement> smallEnumeration(const CarrierDescriptor& desc) {
    std::vector<CarrierElement> out;
    auto push = [&out](CarrierElement e) {
        for (const auto& x : out)
            if (x == e) return;
        out.push_back(std::move(e));
    };
    switch (desc.kind()) {
        case CarrierKind::Scalar: {
            push(zeroOf(desc));
            push(oneOf(desc));
            push(makeScalar(desc, Scalar::fromInt(-1, desc.ring())));
            push(makeScalar(desc, Scalar::fromInt(2, desc.ring())));
            break;
        }
        case CarrierKind::Polynomial: {
            const Scalar one = Scalar::one(desc.ring());
            push(zeroOf(desc));
            for (long d = 0; d <= 3; ++d) push(polyMonomial(desc, d, one));
            push(add(polyMonomial(desc, 1, one), polyMonomial(desc, 0, one)));  // x + 1
            break;
        }
        case CarrierKind::Hurwitz: {
            push(zeroOf(desc));
            auto baseElems = smallEnumeration(desc.hurwitzBase());
            int used = 0;
            for (const auto& b : baseElems) {
                if (isZero(b)) continue;
                for (int pos = 0; pos <= 2; ++pos) {
                    std::vector<CarrierElement> e(pos + 1, zeroOf(desc.hurwitzBase()));
                    e[pos] = b;
                    push(makeHurwitz(desc, std::move(e)));
                }
                if (++used == 2) break;
            }
            break;
        }
        case CarrierKind::Tensor: {
            push(zeroOf(desc));
            if (!desc.reduced()) push(tensorUnit(desc, Scalar::one(desc.ring())));
            if (desc.table()) push(oneOf(desc));
            int b = desc.basisSize();
            push(tensorWord(desc, Word{{0}}));
            if (b > 1) push(tensorWord(desc, Word{{1}}));
            push(tensorWord(desc, Word{{0, 0}}));
            if (b > 1) push(tensorWord(desc, Word{{0, 1}}));
            break;
        }
        case CarrierKind::Finite: {
            push(zeroOf(desc));
            for (std::size_t i = 0; i < desc.table()->size() && i < 4; ++i)
                push(finiteBasisElement(desc, i));
            break;
        }
        case CarrierKind::Semidirect: {
            const auto& member = desc.semi().algebraMembership;
            push(zeroOf(desc));
            if (hasOne(desc.semi().algebra)) push(oneOf(desc));
            auto as = smallEnumeration(desc.semi().algebra);
            auto zs = smallEnumeration(desc.semi().module);
            int used = 0;
            for (const auto& a : as) {
                if (isZero(a)) continue;
                if (member && !member(a)) continue;
                push(makeSemidirect(desc, a, zeroOf(desc.semi().module)));
                if (++used == 2) break;
            }
            used = 0;
            for (const auto& z : zs) {
                if (isZero(z)) continue;
                push(makeSemidirect(desc, zeroOf(desc.semi().algebra), z));
                if (++used == 2) break;
            }
            break;
        }
    }
    return out;
}

}  // namespace ftczin
