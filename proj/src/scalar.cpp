#include "ftczin/scalar.hpp"

#include <cctype>

namespace ftczin {

RingDescriptor RingDescriptor::modular(Integer m) {
    if (m < 2) throw Error("modulus must be at least 2, got " + m.get_str());
    return {RingTag::Modular, std::move(m)};
}

std::string RingDescriptor::str() const {
    switch (tag) {
        case RingTag::Rationals: return "Q";
        case RingTag::Integers: return "Z";
        case RingTag::Modular: return "Z/" + modulus.get_str();
    }
    return "?";
}

Scalar Scalar::rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(RingDescriptor::rationals(), std::move(q));
}

Scalar Scalar::integer(const Integer& n) {
    return Scalar(RingDescriptor::integers(), mpq_class(n));
}

Scalar Scalar::modular(const Integer& value, const Integer& m) {
    Scalar s(RingDescriptor::modular(m), mpq_class(value));
    s.reduceModular();
    return s;
}

void Scalar::reduceModular() {
    if (ring_.tag != RingTag::Modular) return;
    Integer v = v_.get_num();
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), ring_.modulus.get_mpz_t());  // result in [0, m)
    v_ = mpq_class(r);
}

Scalar Scalar::zero(const RingDescriptor& ring) { return Scalar(ring, mpq_class(0)); }

Scalar Scalar::one(const RingDescriptor& ring) { return Scalar(ring, mpq_class(1)); }

Scalar Scalar::fromInt(long n, const RingDescriptor& ring) {
    Scalar s(ring, mpq_class(n));
    s.reduceModular();
    return s;
}

void Scalar::requireSameRing(const Scalar& a, const Scalar& b) {
    if (!(a.ring_ == b.ring_))
        throw RingMismatchError("scalar rings differ: " + a.ring_.str() + " vs " + b.ring_.str());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::requireSameRing(a, b);
    Scalar r(a.ring_, a.v_ + b.v_);
    r.reduceModular();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::requireSameRing(a, b);
    Scalar r(a.ring_, a.v_ - b.v_);
    r.reduceModular();
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::requireSameRing(a, b);
    Scalar r(a.ring_, a.v_ * b.v_);
    r.reduceModular();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(ring_, -v_);
    r.reduceModular();
    return r;
}

bool Scalar::invertible() const {
    if (isZero()) return false;
    switch (ring_.tag) {
        case RingTag::Rationals: return true;
        case RingTag::Integers: return v_ == 1 || v_ == -1;
        case RingTag::Modular: {
            Integer g;
            mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), ring_.modulus.get_mpz_t());
            return g == 1;
        }
    }
    return false;
}

Scalar Scalar::inverse() const {
    if (isZero()) {
        // In a modular ring zero is just one more non-invertible element
        // (p mod p must surface as such); over Q and Z it is division by zero.
        if (ring_.tag == RingTag::Modular)
            throw NotInvertibleError("not invertible mod " + ring_.modulus.get_str(), str());
        throw DivisionByZeroError("inverse of zero in " + ring_.str());
    }
    switch (ring_.tag) {
        case RingTag::Rationals:
            return Scalar(ring_, 1 / v_);
        case RingTag::Integers:
            if (v_ == 1 || v_ == -1) return *this;
            throw NotInvertibleError("not invertible over Z", str());
        case RingTag::Modular: {
            Integer inv;
            int ok = mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(),
                                ring_.modulus.get_mpz_t());
            if (!ok) throw NotInvertibleError("not invertible mod " + ring_.modulus.get_str(), str());
            return Scalar(ring_, mpq_class(inv));
        }
    }
    throw Error("unreachable ring tag");
}

Scalar Scalar::absValue() const {
    if (v_ < 0) return -*this;
    return *this;
}

std::string Scalar::str() const {
    switch (ring_.tag) {
        case RingTag::Rationals:
            if (v_.get_den() == 1) return v_.get_num().get_str();
            return v_.get_num().get_str() + "/" + v_.get_den().get_str();
        case RingTag::Integers:
            return v_.get_num().get_str();
        case RingTag::Modular:
            return v_.get_num().get_str() + " mod " + ring_.modulus.get_str();
    }
    return "?";
}

namespace {

void skipSpace(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Integer parseInteger(std::string_view s, std::size_t& i, bool signAllowed) {
    skipSpace(s, i);
    std::size_t start = i;
    if (signAllowed && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    return Integer(std::string(s.substr(start, i - start)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text, const RingDescriptor& ring) {
    std::size_t i = 0;
    Integer num = parseInteger(text, i, true);
    skipSpace(text, i);
    if (i < text.size() && text[i] == '/') {
        ++i;
        Integer den = parseInteger(text, i, false);
        skipSpace(text, i);
        if (i != text.size()) throw ParseError("trailing input after rational", i);
        if (ring.tag != RingTag::Rationals)
            throw ParseError("fraction not valid in ring " + ring.str(), 0);
        return Scalar::rational(num, den);
    }
    if (i + 3 <= text.size() && text.substr(i, 3) == "mod") {
        i += 3;
        Integer m = parseInteger(text, i, false);
        skipSpace(text, i);
        if (i != text.size()) throw ParseError("trailing input after modulus", i);
        if (ring.tag != RingTag::Modular || ring.modulus != m)
            throw ParseError("modulus does not match ring " + ring.str(), 0);
        return Scalar::modular(num, m);
    }
    skipSpace(text, i);
    if (i != text.size()) throw ParseError("trailing input after scalar", i);
    switch (ring.tag) {
        case RingTag::Rationals: return Scalar::rational(num, 1);
        case RingTag::Integers: return Scalar::integer(num);
        case RingTag::Modular: return Scalar::modular(num, ring.modulus);
    }
    throw Error("unreachable ring tag");
}

}  // namespace ftczin
