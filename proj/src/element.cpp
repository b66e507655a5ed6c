#include "ftczin/element.hpp"

#include <algorithm>

namespace ftczin {

// ---------------------------------------------------------------------------
// Word

bool Word::operator<(const Word& o) const {
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    return letters < o.letters;
}

Word Word::tail() const {
    Word t;
    t.letters.assign(letters.begin() + 1, letters.end());
    return t;
}

std::string Word::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(letters[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// StructureTable

bool StructureTable::operator==(const StructureTable& o) const {
    return ring == o.ring && names == o.names && unitIndex == o.unitIndex &&
           products == o.products;
}

static std::string powerName(int i) {
    if (i == 0) return "1";
    if (i == 1) return "y";
    return "y^" + std::to_string(i);
}

std::shared_ptr<const StructureTable> StructureTable::powerQuotient(int d,
                                                                    const RingDescriptor& ring) {
    if (d < 1) throw Error("power quotient needs d >= 1");
    auto t = std::make_shared<StructureTable>();
    t->ring = ring;
    t->unitIndex = 0;
    for (int i = 0; i < d; ++i) t->names.push_back(powerName(i));
    t->products.assign(d, std::vector<std::optional<Combo>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Combo c;
            if (i + j < d) c.push_back({static_cast<std::size_t>(i + j), Scalar::one(ring)});
            t->products[i][j] = std::move(c);  // empty combo = zero in the quotient
        }
    return t;
}

std::shared_ptr<const StructureTable> StructureTable::truncatedPowers(int d,
                                                                      const RingDescriptor& ring) {
    if (d < 1) throw Error("truncated powers needs d >= 1");
    auto t = std::make_shared<StructureTable>();
    t->ring = ring;
    t->unitIndex = 0;
    for (int i = 0; i < d; ++i) t->names.push_back(powerName(i));
    t->products.assign(d, std::vector<std::optional<Combo>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i + j < d) {
                Combo c;
                c.push_back({static_cast<std::size_t>(i + j), Scalar::one(ring)});
                t->products[i][j] = std::move(c);
            }
            // else left undefined: escapes the presented basis
        }
    return t;
}

// ---------------------------------------------------------------------------
// CarrierDescriptor

CarrierDescriptor CarrierDescriptor::scalarRing(const RingDescriptor& ring) {
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Scalar;
    d.ring_ = ring;
    return d;
}

CarrierDescriptor CarrierDescriptor::polynomial(const RingDescriptor& ring) {
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Polynomial;
    d.ring_ = ring;
    return d;
}

CarrierDescriptor CarrierDescriptor::hurwitz(const CarrierDescriptor& base) {
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Hurwitz;
    d.ring_ = base.ring();
    d.base_ = std::make_shared<CarrierDescriptor>(base);
    return d;
}

CarrierDescriptor CarrierDescriptor::tensor(int basisSize, bool reduced,
                                            const RingDescriptor& ring) {
    if (basisSize < 1) throw Error("tensor carrier needs basisSize >= 1");
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Tensor;
    d.ring_ = ring;
    d.basisSize_ = basisSize;
    d.reduced_ = reduced;
    return d;
}

CarrierDescriptor CarrierDescriptor::mixableWords(std::shared_ptr<const StructureTable> letters) {
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Tensor;
    d.ring_ = letters->ring;
    d.basisSize_ = static_cast<int>(letters->size());
    d.reduced_ = true;
    d.table_ = std::move(letters);
    return d;
}

CarrierDescriptor CarrierDescriptor::finiteAlgebra(std::shared_ptr<const StructureTable> table) {
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Finite;
    d.ring_ = table->ring;
    d.table_ = std::move(table);
    return d;
}

CarrierDescriptor CarrierDescriptor::semidirect(std::shared_ptr<const SemidirectSpec> spec) {
    if (!(spec->algebra.ring() == spec->module.ring()))
        throw RingMismatchError("semidirect parts live over different rings");
    CarrierDescriptor d;
    d.kind_ = CarrierKind::Semidirect;
    d.ring_ = spec->algebra.ring();
    d.semi_ = std::move(spec);
    return d;
}

const CarrierDescriptor& CarrierDescriptor::hurwitzBase() const {
    if (kind_ != CarrierKind::Hurwitz || !base_) throw Error("not a Hurwitz carrier");
    return *base_;
}

const SemidirectSpec& CarrierDescriptor::semi() const {
    if (kind_ != CarrierKind::Semidirect || !semi_) throw Error("not a semidirect carrier");
    return *semi_;
}

bool CarrierDescriptor::operator==(const CarrierDescriptor& o) const {
    if (kind_ != o.kind_ || !(ring_ == o.ring_)) return false;
    switch (kind_) {
        case CarrierKind::Scalar:
        case CarrierKind::Polynomial:
            return true;
        case CarrierKind::Hurwitz:
            return *base_ == *o.base_;
        case CarrierKind::Tensor:
            if (basisSize_ != o.basisSize_ || reduced_ != o.reduced_) return false;
            if (static_cast<bool>(table_) != static_cast<bool>(o.table_)) return false;
            return !table_ || table_ == o.table_ || *table_ == *o.table_;
        case CarrierKind::Finite:
            return table_ == o.table_ || *table_ == *o.table_;
        case CarrierKind::Semidirect:
            return semi_->algebra == o.semi_->algebra && semi_->module == o.semi_->module;
    }
    return false;
}

std::string CarrierDescriptor::str() const {
    switch (kind_) {
        case CarrierKind::Scalar: return ring_.str();
        case CarrierKind::Polynomial: return ring_.str() + "[x]";
        case CarrierKind::Hurwitz: return "H(" + base_->str() + ")";
        case CarrierKind::Tensor:
            if (table_) return "RB(dim " + std::to_string(basisSize_) + " over " + ring_.str() + ")";
            return (reduced_ ? "Sh+(" : "Sh(") + std::to_string(basisSize_) + " over " +
                   ring_.str() + ")";
        case CarrierKind::Finite: {
            std::string s = ring_.str() + "<";
            for (std::size_t i = 0; i < table_->names.size(); ++i) {
                if (i) s += ",";
                s += table_->names[i];
            }
            return s + ">";
        }
        case CarrierKind::Semidirect:
            if (!semi_->label.empty()) return semi_->label;
            return semi_->algebra.str() + " x| " + semi_->module.str();
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Payload equality that needs a complete CarrierElement

bool HurwitzData::operator==(const HurwitzData& o) const { return entries == o.entries; }
bool SemidirectData::operator==(const SemidirectData& o) const { return parts == o.parts; }

// ---------------------------------------------------------------------------
// CarrierElement

CarrierElement::CarrierElement()
    : desc_(CarrierDescriptor::scalarRing(RingDescriptor::rationals())),
      v_(Scalar::zero(RingDescriptor::rationals())) {}

CarrierElement::CarrierElement(CarrierDescriptor desc, Payload payload)
    : desc_(std::move(desc)), v_(std::move(payload)) {}

bool CarrierElement::operator==(const CarrierElement& o) const {
    return desc_ == o.desc_ && v_ == o.v_;
}

static void requireKind(const CarrierDescriptor& d, CarrierKind k, const char* what) {
    if (d.kind() != k)
        throw DescriptorMismatchError(std::string(what) + " needs a different carrier, got " +
                                      d.str());
}

static void requireSameDescriptor(const CarrierElement& x, const CarrierElement& y) {
    if (x.descriptor() != y.descriptor())
        throw DescriptorMismatchError("carrier mismatch: " + x.descriptor().str() + " vs " +
                                      y.descriptor().str());
}

// ---------------------------------------------------------------------------
// Constructors

CarrierElement makeScalar(const CarrierDescriptor& desc, Scalar value) {
    requireKind(desc, CarrierKind::Scalar, "makeScalar");
    if (!(value.ring() == desc.ring()))
        throw RingMismatchError("scalar ring " + value.ring().str() + " vs carrier over " +
                                desc.ring().str());
    return CarrierElement(desc, std::move(value));
}

CarrierElement makePolynomial(const CarrierDescriptor& desc, std::map<long, Scalar> coeffs) {
    requireKind(desc, CarrierKind::Polynomial, "makePolynomial");
    PolynomialData p;
    for (auto& [deg, c] : coeffs) {
        if (deg < 0) throw Error("polynomial degree must be >= 0");
        if (!(c.ring() == desc.ring())) throw RingMismatchError("coefficient ring mismatch");
        if (!c.isZero()) p.coeffs.emplace(deg, c);
    }
    return CarrierElement(desc, std::move(p));
}

CarrierElement polyMonomial(const CarrierDescriptor& desc, long degree, const Scalar& coeff) {
    std::map<long, Scalar> m;
    m.emplace(degree, coeff);
    return makePolynomial(desc, std::move(m));
}

CarrierElement makeHurwitz(const CarrierDescriptor& desc, std::vector<CarrierElement> entries) {
    requireKind(desc, CarrierKind::Hurwitz, "makeHurwitz");
    for (const auto& e : entries)
        if (e.descriptor() != desc.hurwitzBase())
            throw DescriptorMismatchError("Hurwitz entry outside base carrier " +
                                          desc.hurwitzBase().str());
    while (!entries.empty() && isZero(entries.back())) entries.pop_back();
    HurwitzData h;
    h.entries = std::move(entries);
    return CarrierElement(desc, std::move(h));
}

CarrierElement makeTensor(const CarrierDescriptor& desc, std::map<Word, Scalar> words,
                          Scalar unit) {
    requireKind(desc, CarrierKind::Tensor, "makeTensor");
    TensorData t;
    t.unit = Scalar::zero(desc.ring());
    for (auto& [w, c] : words) {
        if (w.letters.empty()) throw Error("tensor word must be nonempty");
        for (int l : w.letters)
            if (l < 0 || l >= desc.basisSize())
                throw Error("word letter " + std::to_string(l) + " outside basis of size " +
                            std::to_string(desc.basisSize()));
        if (!(c.ring() == desc.ring())) throw RingMismatchError("coefficient ring mismatch");
        if (!c.isZero()) t.words.emplace(w, c);
    }
    if (!(unit.ring() == desc.ring())) throw RingMismatchError("unit coefficient ring mismatch");
    if (desc.reduced() && !unit.isZero())
        throw DescriptorMismatchError("reduced shuffle carrier cannot hold a unit term");
    if (!desc.reduced()) t.unit = std::move(unit);
    return CarrierElement(desc, std::move(t));
}

CarrierElement tensorWord(const CarrierDescriptor& desc, Word w) {
    std::map<Word, Scalar> m;
    m.emplace(std::move(w), Scalar::one(desc.ring()));
    return makeTensor(desc, std::move(m), Scalar::zero(desc.ring()));
}

CarrierElement tensorUnit(const CarrierDescriptor& desc, const Scalar& c) {
    return makeTensor(desc, {}, c);
}

CarrierElement makeFinite(const CarrierDescriptor& desc, std::map<std::size_t, Scalar> coords) {
    requireKind(desc, CarrierKind::Finite, "makeFinite");
    FiniteData f;
    for (auto& [i, c] : coords) {
        if (i >= desc.table()->size()) throw Error("basis index out of range");
        if (!(c.ring() == desc.ring())) throw RingMismatchError("coefficient ring mismatch");
        if (!c.isZero()) f.coords.emplace(i, c);
    }
    return CarrierElement(desc, std::move(f));
}

CarrierElement finiteBasisElement(const CarrierDescriptor& desc, std::size_t index) {
    std::map<std::size_t, Scalar> m;
    m.emplace(index, Scalar::one(desc.ring()));
    return makeFinite(desc, std::move(m));
}

CarrierElement makeSemidirect(const CarrierDescriptor& desc, CarrierElement algebraPart,
                              CarrierElement modulePart) {
    requireKind(desc, CarrierKind::Semidirect, "makeSemidirect");
    const SemidirectSpec& s = desc.semi();
    if (algebraPart.descriptor() != s.algebra || modulePart.descriptor() != s.module)
        throw DescriptorMismatchError("semidirect parts do not match " + desc.str());
    if (s.algebraMembership && !s.algebraMembership(algebraPart))
        throw RestrictionError("algebra part outside the constrained subalgebra",
                               toText(algebraPart));
    SemidirectData d;
    d.parts.push_back(std::move(algebraPart));
    d.parts.push_back(std::move(modulePart));
    return CarrierElement(desc, std::move(d));
}

// ---------------------------------------------------------------------------
// Zero / one / predicates

CarrierElement zeroOf(const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar: return CarrierElement(desc, Scalar::zero(desc.ring()));
        case CarrierKind::Polynomial: return CarrierElement(desc, PolynomialData{});
        case CarrierKind::Hurwitz: return CarrierElement(desc, HurwitzData{});
        case CarrierKind::Tensor: {
            TensorData t;
            t.unit = Scalar::zero(desc.ring());
            return CarrierElement(desc, std::move(t));
        }
        case CarrierKind::Finite: return CarrierElement(desc, FiniteData{});
        case CarrierKind::Semidirect:
            return makeSemidirect(desc, zeroOf(desc.semi().algebra), zeroOf(desc.semi().module));
    }
    throw Error("unreachable carrier kind");
}

bool hasOne(const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar:
        case CarrierKind::Polynomial:
        case CarrierKind::Finite:
            return true;
        case CarrierKind::Hurwitz: return hasOne(desc.hurwitzBase());
        case CarrierKind::Tensor: return !desc.reduced() || static_cast<bool>(desc.table());
        case CarrierKind::Semidirect: return hasOne(desc.semi().algebra);
    }
    return false;
}

CarrierElement oneOf(const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar: return CarrierElement(desc, Scalar::one(desc.ring()));
        case CarrierKind::Polynomial: return polyMonomial(desc, 0, Scalar::one(desc.ring()));
        case CarrierKind::Hurwitz: return makeHurwitz(desc, {oneOf(desc.hurwitzBase())});
        case CarrierKind::Tensor:
            if (desc.table())
                return tensorWord(desc, Word{{static_cast<int>(desc.table()->unitIndex)}});
            if (!desc.reduced()) return tensorUnit(desc, Scalar::one(desc.ring()));
            throw Error("reduced shuffle algebra has no unit");
        case CarrierKind::Finite: return finiteBasisElement(desc, desc.table()->unitIndex);
        case CarrierKind::Semidirect:
            return makeSemidirect(desc, oneOf(desc.semi().algebra), zeroOf(desc.semi().module));
    }
    throw Error("unreachable carrier kind");
}

bool isZero(const CarrierElement& x) {
    switch (x.descriptor().kind()) {
        case CarrierKind::Scalar: return x.scalar().isZero();
        case CarrierKind::Polynomial: return x.poly().coeffs.empty();
        case CarrierKind::Hurwitz: return x.hurwitz().entries.empty();
        case CarrierKind::Tensor: return x.tensor().words.empty() && x.tensor().unit.isZero();
        case CarrierKind::Finite: return x.finite().coords.empty();
        case CarrierKind::Semidirect:
            return isZero(x.semi().parts[0]) && isZero(x.semi().parts[1]);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Additive structure

CarrierElement add(const CarrierElement& x, const CarrierElement& y) {
    requireSameDescriptor(x, y);
    const CarrierDescriptor& d = x.descriptor();
    switch (d.kind()) {
        case CarrierKind::Scalar: return CarrierElement(d, x.scalar() + y.scalar());
        case CarrierKind::Polynomial: {
            std::map<long, Scalar> m = x.poly().coeffs;
            for (const auto& [deg, c] : y.poly().coeffs) {
                auto it = m.find(deg);
                if (it == m.end())
                    m.emplace(deg, c);
                else
                    it->second = it->second + c;
            }
            return makePolynomial(d, std::move(m));
        }
        case CarrierKind::Hurwitz: {
            const auto& a = x.hurwitz().entries;
            const auto& b = y.hurwitz().entries;
            std::vector<CarrierElement> r;
            std::size_t n = std::max(a.size(), b.size());
            r.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (i < a.size() && i < b.size())
                    r.push_back(add(a[i], b[i]));
                else
                    r.push_back(i < a.size() ? a[i] : b[i]);
            }
            return makeHurwitz(d, std::move(r));
        }
        case CarrierKind::Tensor: {
            std::map<Word, Scalar> m = x.tensor().words;
            for (const auto& [w, c] : y.tensor().words) {
                auto it = m.find(w);
                if (it == m.end())
                    m.emplace(w, c);
                else
                    it->second = it->second + c;
            }
            return makeTensor(d, std::move(m), x.tensor().unit + y.tensor().unit);
        }
        case CarrierKind::Finite: {
            std::map<std::size_t, Scalar> m = x.finite().coords;
            for (const auto& [i, c] : y.finite().coords) {
                auto it = m.find(i);
                if (it == m.end())
                    m.emplace(i, c);
                else
                    it->second = it->second + c;
            }
            return makeFinite(d, std::move(m));
        }
        case CarrierKind::Semidirect:
            return makeSemidirect(d, add(x.semi().parts[0], y.semi().parts[0]),
                                  add(x.semi().parts[1], y.semi().parts[1]));
    }
    throw Error("unreachable carrier kind");
}

CarrierElement negate(const CarrierElement& x) {
    return scalarMul(-Scalar::one(x.descriptor().ring()), x);
}

CarrierElement sub(const CarrierElement& x, const CarrierElement& y) { return add(x, negate(y)); }

CarrierElement scalarMul(const Scalar& c, const CarrierElement& x) {
    const CarrierDescriptor& d = x.descriptor();
    if (!(c.ring() == d.ring())) throw RingMismatchError("scalar outside carrier ring");
    switch (d.kind()) {
        case CarrierKind::Scalar: return CarrierElement(d, c * x.scalar());
        case CarrierKind::Polynomial: {
            std::map<long, Scalar> m;
            for (const auto& [deg, a] : x.poly().coeffs) m.emplace(deg, c * a);
            return makePolynomial(d, std::move(m));
        }
        case CarrierKind::Hurwitz: {
            std::vector<CarrierElement> r;
            r.reserve(x.hurwitz().entries.size());
            for (const auto& e : x.hurwitz().entries) r.push_back(scalarMul(c, e));
            return makeHurwitz(d, std::move(r));
        }
        case CarrierKind::Tensor: {
            std::map<Word, Scalar> m;
            for (const auto& [w, a] : x.tensor().words) m.emplace(w, c * a);
            return makeTensor(d, std::move(m),
                              d.reduced() ? Scalar::zero(d.ring()) : c * x.tensor().unit);
        }
        case CarrierKind::Finite: {
            std::map<std::size_t, Scalar> m;
            for (const auto& [i, a] : x.finite().coords) m.emplace(i, c * a);
            return makeFinite(d, std::move(m));
        }
        case CarrierKind::Semidirect:
            return makeSemidirect(d, scalarMul(c, x.semi().parts[0]),
                                  scalarMul(c, x.semi().parts[1]));
    }
    throw Error("unreachable carrier kind");
}

// ---------------------------------------------------------------------------
// Word-level shuffle machinery. Internal keys are raw letter vectors so the
// empty word can appear in intermediate results (tails may be empty).

namespace {

using RawWord = std::vector<int>;
using RawSum = std::map<RawWord, Integer>;

// The defining recursion: u sh v = u0 (x) (tail(u) sh v) + v0 (x) (u sh tail(v)).
RawSum shuffleRaw(const RawWord& u, std::size_t i, const RawWord& v, std::size_t j) {
    RawSum out;
    if (i == u.size() && j == v.size()) {
        out[RawWord{}] = 1;
        return out;
    }
    if (i < u.size()) {
        for (const auto& [w, m] : shuffleRaw(u, i + 1, v, j)) {
            RawWord nw;
            nw.reserve(w.size() + 1);
            nw.push_back(u[i]);
            nw.insert(nw.end(), w.begin(), w.end());
            out[nw] += m;
        }
    }
    if (j < v.size()) {
        for (const auto& [w, m] : shuffleRaw(u, i, v, j + 1)) {
            RawWord nw;
            nw.reserve(w.size() + 1);
            nw.push_back(v[j]);
            nw.insert(nw.end(), w.begin(), w.end());
            out[nw] += m;
        }
    }
    return out;
}

RawWord rawTail(const std::vector<int>& w) { return RawWord(w.begin() + 1, w.end()); }

Scalar timesMultiplicity(const Scalar& c, const Integer& m, const RingDescriptor& ring) {
    Scalar f = (ring.tag == RingTag::Rationals) ? Scalar::rational(m, 1)
               : (ring.tag == RingTag::Integers)
                   ? Scalar::integer(m)
                   : Scalar::modular(m, ring.modulus);
    return c * f;
}

void accumulate(std::map<Word, Scalar>& acc, const Word& w, const Scalar& c) {
    if (c.isZero()) return;
    auto it = acc.find(w);
    if (it == acc.end())
        acc.emplace(w, c);
    else
        it->second = it->second + c;
}

}  // namespace

CarrierElement shuffleProduct(const CarrierElement& u, const CarrierElement& v) {
    requireSameDescriptor(u, v);
    const CarrierDescriptor& d = u.descriptor();
    requireKind(d, CarrierKind::Tensor, "shuffleProduct");
    const TensorData& a = u.tensor();
    const TensorData& b = v.tensor();
    const RingDescriptor& ring = d.ring();

    std::map<Word, Scalar> out;
    Scalar outUnit = a.unit * b.unit;
    // 1 sh w = w on both sides.
    for (const auto& [w, c] : b.words) accumulate(out, w, a.unit * c);
    for (const auto& [w, c] : a.words) accumulate(out, w, b.unit * c);
    for (const auto& [wu, cu] : a.words)
        for (const auto& [wv, cv] : b.words) {
            Scalar c = cu * cv;
            for (const auto& [raw, mult] : shuffleRaw(wu.letters, 0, wv.letters, 0))
                accumulate(out, Word{raw}, timesMultiplicity(c, mult, ring));
        }
    return makeTensor(d, std::move(out), std::move(outUnit));
}

CarrierElement shuffleProductOracle(const CarrierDescriptor& desc, const Word& u, const Word& v) {
    requireKind(desc, CarrierKind::Tensor, "shuffleProductOracle");
    // Enumerate the C(m+n, m) position subsets for the letters of u directly.
    std::size_t m = u.size(), n = v.size(), total = m + n;
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[i] = i;
    std::map<Word, Scalar> out;
    while (true) {
        RawWord w(total, -1);
        for (std::size_t i = 0; i < m; ++i) w[pos[i]] = u.letters[i];
        std::size_t vi = 0;
        for (std::size_t k = 0; k < total; ++k)
            if (w[k] == -1) w[k] = v.letters[vi++];
        accumulate(out, Word{w}, Scalar::one(desc.ring()));
        // next combination of positions
        std::size_t i = m;
        while (i > 0 && pos[i - 1] == total - m + (i - 1)) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t k = i; k < m; ++k) pos[k] = pos[k - 1] + 1;
    }
    return makeTensor(desc, std::move(out), Scalar::zero(desc.ring()));
}

CarrierElement mixableShuffleProduct(const CarrierElement& s, const CarrierElement& t) {
    requireSameDescriptor(s, t);
    const CarrierDescriptor& d = s.descriptor();
    requireKind(d, CarrierKind::Tensor, "mixableShuffleProduct");
    if (!d.table()) throw DescriptorMismatchError("mixable shuffle needs a letter table");
    const StructureTable& tab = *d.table();
    const RingDescriptor& ring = d.ring();

    std::map<Word, Scalar> out;
    for (const auto& [wa, ca] : s.tensor().words)
        for (const auto& [wb, cb] : t.tensor().words) {
            const auto& combo = tab.products[wa.head()][wb.head()];
            if (!combo)
                throw BasisOverflowError("letter product " + tab.names[wa.head()] + " * " +
                                         tab.names[wb.head()] + " escapes the presented basis");
            if (combo->empty()) continue;  // product is zero in the presented algebra
            Scalar c = ca * cb;
            RawSum tails = shuffleRaw(rawTail(wa.letters), 0, rawTail(wb.letters), 0);
            for (const auto& [k, ck] : *combo)
                for (const auto& [raw, mult] : tails) {
                    RawWord nw;
                    nw.reserve(raw.size() + 1);
                    nw.push_back(static_cast<int>(k));
                    nw.insert(nw.end(), raw.begin(), raw.end());
                    accumulate(out, Word{nw}, timesMultiplicity(c * ck, mult, ring));
                }
        }
    return makeTensor(d, std::move(out), Scalar::zero(ring));
}

CarrierElement shuffleZinbielOp(const CarrierElement& x, const CarrierElement& y) {
    requireSameDescriptor(x, y);
    const CarrierDescriptor& d = x.descriptor();
    requireKind(d, CarrierKind::Tensor, "shuffleZinbielOp");
    if (!x.tensor().unit.isZero() || !y.tensor().unit.isZero())
        throw Error("Zinbiel operator rejects unit terms: 1 <| 1 is undefined");
    const RingDescriptor& ring = d.ring();
    std::map<Word, Scalar> out;
    for (const auto& [wx, cx] : x.tensor().words)
        for (const auto& [wy, cy] : y.tensor().words) {
            Scalar c = cx * cy;
            for (const auto& [raw, mult] : shuffleRaw(rawTail(wx.letters), 0, wy.letters, 0)) {
                RawWord nw;
                nw.reserve(raw.size() + 1);
                nw.push_back(wx.head());
                nw.insert(nw.end(), raw.begin(), raw.end());
                accumulate(out, Word{nw}, timesMultiplicity(c, mult, ring));
            }
        }
    return makeTensor(d, std::move(out), Scalar::zero(ring));
}

CarrierElement shuffleModuleAction(const CarrierElement& a, const CarrierElement& w) {
    const CarrierDescriptor& da = a.descriptor();
    const CarrierDescriptor& dw = w.descriptor();
    requireKind(da, CarrierKind::Tensor, "shuffleModuleAction");
    requireKind(dw, CarrierKind::Tensor, "shuffleModuleAction");
    if (da.basisSize() != dw.basisSize() || !(da.ring() == dw.ring()))
        throw DescriptorMismatchError("shuffle action over incompatible bases");
    const RingDescriptor& ring = dw.ring();
    // action(a, w) = unit(a) w + w0 (x) (tail(w) sh a), extended bilinearly;
    // the module element's head is peeled.
    std::map<Word, Scalar> out;
    for (const auto& [ww, cw] : w.tensor().words) accumulate(out, ww, a.tensor().unit * cw);
    for (const auto& [wa, ca] : a.tensor().words)
        for (const auto& [ww, cw] : w.tensor().words) {
            Scalar c = ca * cw;
            for (const auto& [raw, mult] : shuffleRaw(rawTail(ww.letters), 0, wa.letters, 0)) {
                RawWord nw;
                nw.reserve(raw.size() + 1);
                nw.push_back(ww.head());
                nw.insert(nw.end(), raw.begin(), raw.end());
                accumulate(out, Word{nw}, timesMultiplicity(c, mult, ring));
            }
        }
    return makeTensor(dw, std::move(out), Scalar::zero(ring));
}

// ---------------------------------------------------------------------------
// Polynomial / Hurwitz / finite products

CarrierElement polyMul(const CarrierElement& p, const CarrierElement& q) {
    requireSameDescriptor(p, q);
    requireKind(p.descriptor(), CarrierKind::Polynomial, "polyMul");
    std::map<long, Scalar> m;
    for (const auto& [da, ca] : p.poly().coeffs)
        for (const auto& [db, cb] : q.poly().coeffs) {
            Scalar c = ca * cb;
            if (c.isZero()) continue;
            auto it = m.find(da + db);
            if (it == m.end())
                m.emplace(da + db, c);
            else
                it->second = it->second + c;
        }
    return makePolynomial(p.descriptor(), std::move(m));
}

// (fg)(n) = sum_k C(n,k) f(k) g(n-k): the binomial Hurwitz convolution, which
// is what makes the left shift a derivation and the right shift an integration
// over any coefficient ring.
CarrierElement hurwitzMul(const CarrierElement& f, const CarrierElement& g) {
    requireSameDescriptor(f, g);
    requireKind(f.descriptor(), CarrierKind::Hurwitz, "hurwitzMul");
    const auto& a = f.hurwitz().entries;
    const auto& b = g.hurwitz().entries;
    if (a.empty() || b.empty()) return zeroOf(f.descriptor());
    const CarrierDescriptor& base = f.descriptor().hurwitzBase();
    const RingDescriptor& ring = f.descriptor().ring();
    std::vector<CarrierElement> r(a.size() + b.size() - 1, zeroOf(base));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), i + j, i);
            Scalar weight = (ring.tag == RingTag::Rationals) ? Scalar::rational(binom, 1)
                            : (ring.tag == RingTag::Integers)
                                ? Scalar::integer(binom)
                                : Scalar::modular(binom, ring.modulus);
            r[i + j] = add(r[i + j], scalarMul(weight, mul(a[i], b[j])));
        }
    return makeHurwitz(f.descriptor(), std::move(r));
}

CarrierElement finiteMul(const CarrierElement& a, const CarrierElement& b) {
    requireSameDescriptor(a, b);
    requireKind(a.descriptor(), CarrierKind::Finite, "finiteMul");
    const StructureTable& tab = *a.descriptor().table();
    std::map<std::size_t, Scalar> m;
    for (const auto& [i, ca] : a.finite().coords)
        for (const auto& [j, cb] : b.finite().coords) {
            const auto& combo = tab.products[i][j];
            if (!combo)
                throw BasisOverflowError("basis product " + tab.names[i] + " * " + tab.names[j] +
                                         " escapes the presented basis");
            Scalar c = ca * cb;
            for (const auto& [k, ck] : *combo) {
                Scalar v = c * ck;
                if (v.isZero()) continue;
                auto it = m.find(k);
                if (it == m.end())
                    m.emplace(k, v);
                else
                    it->second = it->second + v;
            }
        }
    return makeFinite(a.descriptor(), std::move(m));
}

// ---------------------------------------------------------------------------
// Semidirect product algebra

CarrierElement semidirectMul(const CarrierElement& x, const CarrierElement& y) {
    requireSameDescriptor(x, y);
    requireKind(x.descriptor(), CarrierKind::Semidirect, "semidirectMul");
    const SemidirectSpec& s = x.descriptor().semi();
    const CarrierElement& a = x.semi().parts[0];
    const CarrierElement& ax = x.semi().parts[1];
    const CarrierElement& b = y.semi().parts[0];
    const CarrierElement& by = y.semi().parts[1];
    // (a,x)(b,y) = (ab, ay + bx + x *<| y) with x * y = x <| y + y <| x.
    CarrierElement modulePart = add(add(s.baseAction(a, by), s.baseAction(b, ax)),
                                    add(s.zin(ax, by), s.zin(by, ax)));
    return makeSemidirect(x.descriptor(), mul(a, b), std::move(modulePart));
}

CarrierElement semidirectAction(const CarrierElement& ax, const CarrierElement& y) {
    requireKind(ax.descriptor(), CarrierKind::Semidirect, "semidirectAction");
    const SemidirectSpec& s = ax.descriptor().semi();
    if (y.descriptor() != s.module)
        throw DescriptorMismatchError("semidirect action target outside " + s.module.str());
    return add(s.baseAction(ax.semi().parts[0], y), s.zin(y, ax.semi().parts[1]));
}

// ---------------------------------------------------------------------------
// Hurwitz shifts

CarrierElement hurwitzShiftLeft(const CarrierElement& f) {
    requireKind(f.descriptor(), CarrierKind::Hurwitz, "hurwitzShiftLeft");
    const auto& e = f.hurwitz().entries;
    if (e.empty()) return f;
    return makeHurwitz(f.descriptor(), std::vector<CarrierElement>(e.begin() + 1, e.end()));
}

CarrierElement hurwitzShiftRight(const CarrierElement& f) {
    requireKind(f.descriptor(), CarrierKind::Hurwitz, "hurwitzShiftRight");
    std::vector<CarrierElement> r;
    r.reserve(f.hurwitz().entries.size() + 1);
    r.push_back(zeroOf(f.descriptor().hurwitzBase()));
    for (const auto& e : f.hurwitz().entries) r.push_back(e);
    return makeHurwitz(f.descriptor(), std::move(r));
}

CarrierElement hurwitzEulerScale(const CarrierElement& f) {
    requireKind(f.descriptor(), CarrierKind::Hurwitz, "hurwitzEulerScale");
    std::vector<CarrierElement> r;
    const auto& e = f.hurwitz().entries;
    r.reserve(e.size());
    for (std::size_t n = 0; n < e.size(); ++n)
        r.push_back(scalarMul(Scalar::fromInt(static_cast<long>(n), f.descriptor().ring()), e[n]));
    return makeHurwitz(f.descriptor(), std::move(r));
}

// ---------------------------------------------------------------------------
// Generic product

CarrierElement mul(const CarrierElement& x, const CarrierElement& y) {
    requireSameDescriptor(x, y);
    switch (x.descriptor().kind()) {
        case CarrierKind::Scalar:
            return CarrierElement(x.descriptor(), x.scalar() * y.scalar());
        case CarrierKind::Polynomial: return polyMul(x, y);
        case CarrierKind::Hurwitz: return hurwitzMul(x, y);
        case CarrierKind::Tensor:
            return x.descriptor().table() ? mixableShuffleProduct(x, y) : shuffleProduct(x, y);
        case CarrierKind::Finite: return finiteMul(x, y);
        case CarrierKind::Semidirect: return semidirectMul(x, y);
    }
    throw Error("unreachable carrier kind");
}

// ---------------------------------------------------------------------------

std::optional<Scalar> asScalarMultipleOfOne(const CarrierElement& x) {
    const CarrierDescriptor& d = x.descriptor();
    switch (d.kind()) {
        case CarrierKind::Scalar: return x.scalar();
        case CarrierKind::Polynomial: {
            if (x.poly().coeffs.empty()) return Scalar::zero(d.ring());
            if (x.poly().coeffs.size() == 1 && x.poly().coeffs.begin()->first == 0)
                return x.poly().coeffs.begin()->second;
            return std::nullopt;
        }
        case CarrierKind::Hurwitz: {
            const auto& e = x.hurwitz().entries;
            if (e.empty()) return Scalar::zero(d.ring());
            if (e.size() == 1) return asScalarMultipleOfOne(e[0]);
            return std::nullopt;
        }
        case CarrierKind::Tensor: {
            const TensorData& t = x.tensor();
            if (d.table()) {
                Word unitWord{{static_cast<int>(d.table()->unitIndex)}};
                if (t.words.empty()) return Scalar::zero(d.ring());
                if (t.words.size() == 1 && t.words.begin()->first == unitWord)
                    return t.words.begin()->second;
                return std::nullopt;
            }
            if (d.reduced()) return isZero(x) ? std::optional<Scalar>(Scalar::zero(d.ring()))
                                              : std::nullopt;
            if (t.words.empty()) return t.unit;
            return std::nullopt;
        }
        case CarrierKind::Finite: {
            if (x.finite().coords.empty()) return Scalar::zero(d.ring());
            if (x.finite().coords.size() == 1 &&
                x.finite().coords.begin()->first == d.table()->unitIndex)
                return x.finite().coords.begin()->second;
            return std::nullopt;
        }
        case CarrierKind::Semidirect: {
            if (!isZero(x.semi().parts[1])) return std::nullopt;
            return asScalarMultipleOfOne(x.semi().parts[0]);
        }
    }
    return std::nullopt;
}

}  // namespace ftczin
