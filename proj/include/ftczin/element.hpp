#pragma once

// The concrete carriers: sparse univariate polynomials, finite-support
// Hurwitz sequences, formal sums of tensor words (shuffle / mixable-shuffle
// algebras), finite-basis structure-constant algebras, and semidirect pairs.
// One CarrierElement value type covers all of them; a CarrierDescriptor says
// which carrier an element lives in and fixes zero, one, validity, and the
// canonical text form.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ftczin/scalar.hpp"

namespace ftczin {

class CarrierElement;
class CarrierDescriptor;

// ---------------------------------------------------------------------------
// Words over a finite basis; canonical order is (length, then lex).

struct Word {
    std::vector<int> letters;  // nonempty, values in [0, basisSize)

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const;
    std::size_t size() const { return letters.size(); }
    int head() const { return letters.front(); }
    Word tail() const;                   // empty for single-letter words
    std::string str() const;             // "[0,1,2]"
};

// ---------------------------------------------------------------------------
// A commutative algebra presented on a finite monomial basis with structure
// constants. products[i][j] is the expansion of basis_i * basis_j, or nullopt
// when the product escapes the presented basis.

struct StructureTable {
    using Combo = std::vector<std::pair<std::size_t, Scalar>>;

    RingDescriptor ring;
    std::vector<std::string> names;
    std::size_t unitIndex = 0;
    std::vector<std::vector<std::optional<Combo>>> products;

    std::size_t size() const { return names.size(); }
    bool operator==(const StructureTable& o) const;

    /// k[y]/(y^d) on the basis {1, y, ..., y^{d-1}}; every product defined.
    static std::shared_ptr<const StructureTable> powerQuotient(int d, const RingDescriptor& ring);
    /// Truncated presentation of k[y] on the same basis: products of total
    /// degree >= d escape (used to exercise basis-overflow handling).
    static std::shared_ptr<const StructureTable> truncatedPowers(int d, const RingDescriptor& ring);
};

enum class CarrierKind { Scalar, Polynomial, Hurwitz, Tensor, Finite, Semidirect };

struct SemidirectSpec;

class CarrierDescriptor {
  public:
    CarrierDescriptor() : kind_(CarrierKind::Scalar), ring_(RingDescriptor::rationals()) {}

    static CarrierDescriptor scalarRing(const RingDescriptor& ring);
    static CarrierDescriptor polynomial(const RingDescriptor& ring);
    static CarrierDescriptor hurwitz(const CarrierDescriptor& base);
    /// Shuffle algebra Sh(V) (reduced = false) or Sh+(V) (reduced = true) on a
    /// basis of the given size.
    static CarrierDescriptor tensor(int basisSize, bool reduced, const RingDescriptor& ring);
    /// Word algebra whose letters are the monomials of a structure table and
    /// whose product is the augmented mixable shuffle; carrier of RB(A).
    static CarrierDescriptor mixableWords(std::shared_ptr<const StructureTable> letters);
    static CarrierDescriptor finiteAlgebra(std::shared_ptr<const StructureTable> table);
    static CarrierDescriptor semidirect(std::shared_ptr<const SemidirectSpec> spec);

    CarrierKind kind() const { return kind_; }
    const RingDescriptor& ring() const { return ring_; }
    const CarrierDescriptor& hurwitzBase() const;
    int basisSize() const { return basisSize_; }
    bool reduced() const { return reduced_; }
    const std::shared_ptr<const StructureTable>& table() const { return table_; }
    const SemidirectSpec& semi() const;
    const std::shared_ptr<const SemidirectSpec>& semiPtr() const { return semi_; }

    /// Structural equality; semidirect descriptors compare their component
    /// descriptors (the attached operations are not comparable).
    bool operator==(const CarrierDescriptor& o) const;
    bool operator!=(const CarrierDescriptor& o) const { return !(*this == o); }
    std::string str() const;

  private:
    CarrierKind kind_;
    RingDescriptor ring_;
    std::shared_ptr<const CarrierDescriptor> base_;
    int basisSize_ = 0;
    bool reduced_ = false;
    std::shared_ptr<const StructureTable> table_;
    std::shared_ptr<const SemidirectSpec> semi_;
};

// A x| Z: the data needed to multiply pairs and act on Z. zin is the Zinbiel
// operator of the originating instance, baseAction the action of A on Z.
struct SemidirectSpec {
    CarrierDescriptor algebra;
    CarrierDescriptor module;
    std::function<CarrierElement(const CarrierElement&, const CarrierElement&)> baseAction;
    std::function<CarrierElement(const CarrierElement&, const CarrierElement&)> zin;
    std::function<bool(const CarrierElement&)> algebraMembership;  // may be null
    std::string label;
};

// ---------------------------------------------------------------------------
// Payloads. Canonical form is maintained by the make* constructors: no zero
// coefficients anywhere, Hurwitz entries trimmed of trailing zeros, reduced
// tensor sums carry no unit term.

struct PolynomialData {
    std::map<long, Scalar> coeffs;  // degree -> nonzero coefficient, degrees >= 0
    bool operator==(const PolynomialData&) const = default;
};

struct HurwitzData {
    std::vector<CarrierElement> entries;
    bool operator==(const HurwitzData&) const;
};

struct TensorData {
    std::map<Word, Scalar> words;  // nonzero coefficients only
    Scalar unit;                   // coefficient of the empty word
    bool operator==(const TensorData&) const = default;
};

struct FiniteData {
    std::map<std::size_t, Scalar> coords;  // basis index -> nonzero coefficient
    bool operator==(const FiniteData&) const = default;
};

struct SemidirectData {
    std::vector<CarrierElement> parts;  // exactly {algebra part, module part}
    bool operator==(const SemidirectData&) const;
};

class CarrierElement {
  public:
    using Payload =
        std::variant<Scalar, PolynomialData, HurwitzData, TensorData, FiniteData, SemidirectData>;

    CarrierElement();  // rational scalar zero
    CarrierElement(CarrierDescriptor desc, Payload payload);

    const CarrierDescriptor& descriptor() const { return desc_; }
    const Payload& payload() const { return v_; }

    const Scalar& scalar() const { return std::get<Scalar>(v_); }
    const PolynomialData& poly() const { return std::get<PolynomialData>(v_); }
    const HurwitzData& hurwitz() const { return std::get<HurwitzData>(v_); }
    const TensorData& tensor() const { return std::get<TensorData>(v_); }
    const FiniteData& finite() const { return std::get<FiniteData>(v_); }
    const SemidirectData& semi() const { return std::get<SemidirectData>(v_); }

    bool operator==(const CarrierElement& o) const;
    bool operator!=(const CarrierElement& o) const { return !(*this == o); }

  private:
    CarrierDescriptor desc_;
    Payload v_;
};

// ---------------------------------------------------------------------------
// Construction (each canonicalizes and validates against the descriptor).

CarrierElement makeScalar(const CarrierDescriptor& desc, Scalar value);
CarrierElement makePolynomial(const CarrierDescriptor& desc, std::map<long, Scalar> coeffs);
CarrierElement polyMonomial(const CarrierDescriptor& desc, long degree, const Scalar& coeff);
CarrierElement makeHurwitz(const CarrierDescriptor& desc, std::vector<CarrierElement> entries);
CarrierElement makeTensor(const CarrierDescriptor& desc, std::map<Word, Scalar> words, Scalar unit);
CarrierElement tensorWord(const CarrierDescriptor& desc, Word w);
CarrierElement tensorUnit(const CarrierDescriptor& desc, const Scalar& c);
CarrierElement makeFinite(const CarrierDescriptor& desc, std::map<std::size_t, Scalar> coords);
CarrierElement finiteBasisElement(const CarrierDescriptor& desc, std::size_t index);
CarrierElement makeSemidirect(const CarrierDescriptor& desc, CarrierElement algebraPart,
                              CarrierElement modulePart);

// ---------------------------------------------------------------------------
// Module structure shared by every carrier.

CarrierElement zeroOf(const CarrierDescriptor& desc);
bool hasOne(const CarrierDescriptor& desc);
CarrierElement oneOf(const CarrierDescriptor& desc);
bool isZero(const CarrierElement& x);

CarrierElement add(const CarrierElement& x, const CarrierElement& y);
CarrierElement sub(const CarrierElement& x, const CarrierElement& y);
CarrierElement negate(const CarrierElement& x);
CarrierElement scalarMul(const Scalar& c, const CarrierElement& x);

/// The algebra product of the carrier: polynomial convolution, Hurwitz
/// convolution, shuffle or mixable shuffle, semidirect product, scalar
/// multiplication. DescriptorMismatchError when the carriers differ.
CarrierElement mul(const CarrierElement& x, const CarrierElement& y);

/// c with x == c * 1, when x lies in the scalar multiples of the unit.
std::optional<Scalar> asScalarMultipleOfOne(const CarrierElement& x);

// ---------------------------------------------------------------------------
// Named products (the generic mul dispatches to these).

CarrierElement polyMul(const CarrierElement& p, const CarrierElement& q);
CarrierElement hurwitzMul(const CarrierElement& f, const CarrierElement& g);
CarrierElement shuffleProduct(const CarrierElement& u, const CarrierElement& v);
CarrierElement mixableShuffleProduct(const CarrierElement& s, const CarrierElement& t);
CarrierElement semidirectMul(const CarrierElement& x, const CarrierElement& y);
/// Action of A x| Z on Z: (a,x) y = a y + y <| x.
CarrierElement semidirectAction(const CarrierElement& ax, const CarrierElement& y);

/// Independent oracle: enumerates all C(m+n, m) order-preserving
/// interleavings of two words and sums them. Cross-check only.
CarrierElement shuffleProductOracle(const CarrierDescriptor& desc, const Word& u, const Word& v);

/// The Zinbiel operator of the reduced shuffle algebra on word sums:
/// x <| y = x0 (x) (tail(x) sh y), bilinear; rejects unit terms.
CarrierElement shuffleZinbielOp(const CarrierElement& x, const CarrierElement& y);

/// Action of Sh(V) on Sh+(V): action(a, w) = unit(a) w + w <| reduced(a).
CarrierElement shuffleModuleAction(const CarrierElement& a, const CarrierElement& w);

// Hurwitz shifts (the derivation / integration of H(A)).
CarrierElement hurwitzShiftLeft(const CarrierElement& f);
CarrierElement hurwitzShiftRight(const CarrierElement& f);
/// Index-scaling map f(n) |-> n f(n); the Euler derivation of H(A).
CarrierElement hurwitzEulerScale(const CarrierElement& f);

/// Multiply inside the finite-basis algebra; BasisOverflowError when a
/// structure-constant product is undefined.
CarrierElement finiteMul(const CarrierElement& a, const CarrierElement& b);

// ---------------------------------------------------------------------------
// Canonical text (bit-exact) and parsing.

std::string toText(const CarrierElement& x);
CarrierElement parseElement(std::string_view text, const CarrierDescriptor& desc);

}  // namespace ftczin
