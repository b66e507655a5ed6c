#pragma once

// Exact coefficient rings: arbitrary-precision rationals, integers, and
// modular integers behind one Scalar value type. Everything downstream
// compares by exact equality, so canonical form is maintained invariantly:
// rationals are reduced with positive denominator, modular values live in
// [0, modulus).

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ftczin/errors.hpp"

namespace ftczin {

using Integer = mpz_class;

enum class RingTag { Rationals, Integers, Modular };

struct RingDescriptor {
    RingTag tag = RingTag::Rationals;
    Integer modulus = 0;  // >= 2 iff tag == Modular

    static RingDescriptor rationals() { return {RingTag::Rationals, 0}; }
    static RingDescriptor integers() { return {RingTag::Integers, 0}; }
    static RingDescriptor modular(Integer m);

    bool operator==(const RingDescriptor& o) const {
        return tag == o.tag && modulus == o.modulus;
    }
    std::string str() const;  // "Q", "Z", "Z/m"
};

class Scalar {
  public:
    Scalar() : ring_(RingDescriptor::rationals()), v_(0) {}

    /// num/den reduced to canonical form; den = 0 raises ZeroDenominatorError.
    static Scalar rational(const Integer& num, const Integer& den);
    static Scalar integer(const Integer& n);
    /// value reduced into [0, m); m < 2 is rejected.
    static Scalar modular(const Integer& value, const Integer& m);

    static Scalar zero(const RingDescriptor& ring);
    static Scalar one(const RingDescriptor& ring);
    /// Image of a small integer under the structure map k -> ring.
    static Scalar fromInt(long n, const RingDescriptor& ring);

    const RingDescriptor& ring() const { return ring_; }
    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }
    /// Sign in the printed form; modular values are never negative.
    bool isNegative() const { return v_ < 0; }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    bool invertible() const;
    /// Multiplicative inverse; DivisionByZeroError on zero, NotInvertibleError
    /// when no inverse exists in the ring (e.g. 2 over Z, or a zero divisor
    /// mod a composite modulus).
    Scalar inverse() const;
    Scalar absValue() const;

    bool operator==(const Scalar& o) const { return ring_ == o.ring_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text: "p/q" (omit "/1"), "n", "n mod m".
    std::string str() const;
    /// Parses the canonical grammar (optional whitespace allowed). Inside
    /// composite carriers modular coefficients may appear as bare integers;
    /// the "mod m" suffix is checked against the ring when present.
    static Scalar parse(std::string_view text, const RingDescriptor& ring);

  private:
    Scalar(RingDescriptor ring, mpq_class v) : ring_(std::move(ring)), v_(std::move(v)) {}
    void reduceModular();
    static void requireSameRing(const Scalar& a, const Scalar& b);

    RingDescriptor ring_;
    mpq_class v_;  // Integers/Modular keep denominator 1
};

}  // namespace ftczin
