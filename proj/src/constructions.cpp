#include "ftczin/constructions.hpp"

#include <sstream>

namespace ftczin {

// ---------------------------------------------------------------------------
// Graded structure

namespace {

// Finite-dimensional carriers usable as Hurwitz entries in a grading.
std::vector<CarrierElement> flatBasis(const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar: return {oneOf(desc)};
        case CarrierKind::Finite: {
            std::vector<CarrierElement> b;
            for (std::size_t i = 0; i < desc.table()->size(); ++i)
                b.push_back(finiteBasisElement(desc, i));
            return b;
        }
        default:
            throw Error("carrier " + desc.str() + " has no finite flat basis");
    }
}

std::vector<Scalar> flatCoordinates(const CarrierElement& x) {
    const CarrierDescriptor& d = x.descriptor();
    switch (d.kind()) {
        case CarrierKind::Scalar: return {x.scalar()};
        case CarrierKind::Finite: {
            std::vector<Scalar> v(d.table()->size(), Scalar::zero(d.ring()));
            for (const auto& [i, c] : x.finite().coords) v[i] = c;
            return v;
        }
        default:
            throw Error("carrier " + d.str() + " has no finite flat basis");
    }
}

std::vector<Word> wordsOfLength(int basisSize, int len) {
    std::vector<Word> out;
    if (len == 0) return out;
    out.push_back(Word{std::vector<int>(static_cast<std::size_t>(len), 0)});
    while (true) {
        Word w = out.back();
        int i = len - 1;
        while (i >= 0 && w.letters[i] == basisSize - 1) --i;
        if (i < 0) break;
        ++w.letters[i];
        for (int j = i + 1; j < len; ++j) w.letters[j] = 0;
        out.push_back(w);
    }
    return out;
}

}  // namespace

bool isGraded(const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar:
        case CarrierKind::Polynomial:
        case CarrierKind::Tensor:
        case CarrierKind::Finite:
            return true;
        case CarrierKind::Hurwitz: {
            CarrierKind b = desc.hurwitzBase().kind();
            return b == CarrierKind::Scalar || b == CarrierKind::Finite;
        }
        case CarrierKind::Semidirect:
            return false;
    }
    return false;
}

std::vector<CarrierElement> gradedBasis(const CarrierDescriptor& desc, int degree) {
    switch (desc.kind()) {
        case CarrierKind::Scalar:
            return degree == 0 ? std::vector<CarrierElement>{oneOf(desc)}
                               : std::vector<CarrierElement>{};
        case CarrierKind::Polynomial:
            return {polyMonomial(desc, degree, Scalar::one(desc.ring()))};
        case CarrierKind::Finite:
            return degree == 0 ? flatBasis(desc) : std::vector<CarrierElement>{};
        case CarrierKind::Tensor: {
            if (degree == 0) {
                if (desc.reduced()) return {};
                return {tensorUnit(desc, Scalar::one(desc.ring()))};
            }
            std::vector<CarrierElement> out;
            for (const Word& w : wordsOfLength(desc.basisSize(), degree))
                out.push_back(tensorWord(desc, w));
            return out;
        }
        case CarrierKind::Hurwitz: {
            std::vector<CarrierElement> out;
            for (const auto& b : flatBasis(desc.hurwitzBase())) {
                std::vector<CarrierElement> entries(degree + 1, zeroOf(desc.hurwitzBase()));
                entries[degree] = b;
                out.push_back(makeHurwitz(desc, std::move(entries)));
            }
            return out;
        }
        case CarrierKind::Semidirect:
            throw Error("semidirect carriers are not graded");
    }
    throw Error("unreachable carrier kind");
}

std::map<int, std::vector<Scalar>> gradedCoordinates(const CarrierElement& x) {
    const CarrierDescriptor& d = x.descriptor();
    const Scalar zero = Scalar::zero(d.ring());
    std::map<int, std::vector<Scalar>> out;
    switch (d.kind()) {
        case CarrierKind::Scalar:
            if (!x.scalar().isZero()) out[0] = {x.scalar()};
            return out;
        case CarrierKind::Polynomial:
            for (const auto& [deg, c] : x.poly().coeffs) out[static_cast<int>(deg)] = {c};
            return out;
        case CarrierKind::Finite:
            if (!isZero(x)) out[0] = flatCoordinates(x);
            return out;
        case CarrierKind::Tensor: {
            if (!x.tensor().unit.isZero()) out[0] = {x.tensor().unit};
            std::map<int, std::map<Word, Scalar>> byLen;
            for (const auto& [w, c] : x.tensor().words)
                byLen[static_cast<int>(w.size())].emplace(w, c);
            for (const auto& [len, words] : byLen) {
                std::vector<Scalar> coords;
                for (const Word& w : wordsOfLength(d.basisSize(), len)) {
                    auto it = words.find(w);
                    coords.push_back(it == words.end() ? zero : it->second);
                }
                out[len] = std::move(coords);
            }
            return out;
        }
        case CarrierKind::Hurwitz: {
            const auto& e = x.hurwitz().entries;
            for (std::size_t n = 0; n < e.size(); ++n)
                if (!isZero(e[n])) out[static_cast<int>(n)] = flatCoordinates(e[n]);
            return out;
        }
        case CarrierKind::Semidirect:
            throw Error("semidirect carriers are not graded");
    }
    throw Error("unreachable carrier kind");
}

// ---------------------------------------------------------------------------
// Exact small-matrix inversion

std::optional<ScalarMatrix> gaussianInverse(ScalarMatrix a, const RingDescriptor& ring) {
    const std::size_t n = a.size();
    ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(ring)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(ring);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (a[r][col].invertible()) {
                pivot = r;
                break;
            }
        if (pivot == n) return std::nullopt;  // no unit pivot in this column
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = s * a[col][j];
            inv[col][j] = s * inv[col][j];
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].isZero()) continue;
            Scalar f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

// Laplace expansion over column subsets; total over any commutative ring.
Scalar detRec(const ScalarMatrix& m, std::size_t row, unsigned cols,
              std::map<std::pair<std::size_t, unsigned>, Scalar>& memo,
              const RingDescriptor& ring) {
    const std::size_t n = m.size();
    if (row == n) return Scalar::one(ring);
    auto key = std::make_pair(row, cols);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Scalar acc = Scalar::zero(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (!(cols & (1u << c))) continue;
        if (!m[row][c].isZero()) {
            Scalar sub = detRec(m, row + 1, cols & ~(1u << c), memo, ring);
            Scalar term = m[row][c] * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
}

Scalar determinant(const ScalarMatrix& m, const RingDescriptor& ring) {
    if (m.size() > 20) throw Error("determinant dimension too large for exact expansion");
    std::map<std::pair<std::size_t, unsigned>, Scalar> memo;
    return detRec(m, 0, (1u << m.size()) - 1, memo, ring);
}

ScalarMatrix minorMatrix(const ScalarMatrix& m, std::size_t dropRow, std::size_t dropCol) {
    ScalarMatrix out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == dropRow) continue;
        std::vector<Scalar> row;
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c == dropCol) continue;
            row.push_back(m[r][c]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string matrixText(const ScalarMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c) os << ", ";
            os << m[r][c].str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace

ScalarMatrix adjugateInverse(const ScalarMatrix& m, const RingDescriptor& ring) {
    const std::size_t n = m.size();
    Scalar det = determinant(m, ring);
    Scalar detInv = det.inverse();  // NotInvertibleError when singular over the ring
    ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar cof = determinant(minorMatrix(m, j, i), ring);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = detInv * cof;
        }
    return inv;
}

LinearOperator invertKGraded(const LinearOperator& K, int degreeBound) {
    if (!isGraded(K.domain))
        throw Error("invertKGraded needs a graded carrier, got " + K.domain.str());
    const CarrierDescriptor desc = K.domain;
    const RingDescriptor ring = desc.ring();

    auto inverses = std::make_shared<std::map<int, ScalarMatrix>>();
    for (int d = 0; d <= degreeBound; ++d) {
        std::vector<CarrierElement> basis = gradedBasis(desc, d);
        const std::size_t n = basis.size();
        if (n == 0) continue;
        ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(ring)));
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = gradedCoordinates(K.map(basis[j]));
            for (const auto& [deg, v] : coords) {
                if (deg != d)
                    throw Error("K does not preserve the grading: degree " + std::to_string(d) +
                                " maps into degree " + std::to_string(deg));
                for (std::size_t i = 0; i < n; ++i) m[i][j] = v[i];
            }
        }
        std::optional<ScalarMatrix> inv = gaussianInverse(m, ring);
        if (!inv) {
            try {
                inv = adjugateInverse(m, ring);
            } catch (const NotInvertibleError&) {
                throw NotInvertibleError(
                    "graded component of K at degree " + std::to_string(d) + " is singular",
                    matrixText(m));
            } catch (const DivisionByZeroError&) {
                throw NotInvertibleError(
                    "graded component of K at degree " + std::to_string(d) + " is singular",
                    matrixText(m));
            }
        }
        // validate M * M^-1 = I exactly
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar acc = Scalar::zero(ring);
                for (std::size_t k = 0; k < n; ++k) acc = acc + m[i][k] * (*inv)[k][j];
                Scalar want = i == j ? Scalar::one(ring) : Scalar::zero(ring);
                if (acc != want)
                    throw Error("inverse validation failed at degree " + std::to_string(d));
            }
        inverses->emplace(d, std::move(*inv));
    }

    return {K.name + "^-1", desc, desc, [desc, ring, inverses, degreeBound](
                                            const CarrierElement& x) {
                CarrierElement out = zeroOf(desc);
                for (const auto& [deg, coords] : gradedCoordinates(x)) {
                    if (deg > degreeBound)
                        throw DegreeBoundError("element exceeds the inversion degree bound " +
                                               std::to_string(degreeBound) + " at degree " +
                                               std::to_string(deg));
                    const ScalarMatrix& inv = inverses->at(deg);
                    std::vector<CarrierElement> basis = gradedBasis(desc, deg);
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        Scalar acc = Scalar::zero(ring);
                        for (std::size_t j = 0; j < coords.size(); ++j)
                            acc = acc + inv[i][j] * coords[j];
                        if (!acc.isZero()) out = add(out, scalarMul(acc, basis[i]));
                    }
                }
                return out;
            }};
}

// ---------------------------------------------------------------------------
// Factories

FtcPairInstance ftcFromIntegration(std::string name, const LinearOperator& P,
                                   const Action& action, const Sampler& moduleSampler,
                                   const std::vector<CarrierElement>& moduleEnum,
                                   const CheckConfig& cfg) {
    ZinbielInstance zin =
        zinbielFromIntegration(name + "-zin", P, action, moduleSampler, moduleEnum, cfg);
    FtcPairInstance pair = functorG(zin, cfg);
    pair.name = std::move(name);
    return pair;
}

FreeRotaBaxter freeRotaBaxter(std::shared_ptr<const StructureTable> letters) {
    const CarrierDescriptor rb = CarrierDescriptor::mixableWords(std::move(letters));
    FreeRotaBaxter out;
    out.carrier = rb;
    out.integration = {"P", rb, rb,
                       [rb, unit = static_cast<int>(rb.table()->unitIndex)](
                           const CarrierElement& x) {
                           std::map<Word, Scalar> words;
                           for (const auto& [w, c] : x.tensor().words) {
                               Word nw;
                               nw.letters.reserve(w.size() + 1);
                               nw.letters.push_back(unit);
                               nw.letters.insert(nw.letters.end(), w.letters.begin(),
                                                 w.letters.end());
                               words.emplace(std::move(nw), c);
                           }
                           return makeTensor(rb, std::move(words), Scalar::zero(rb.ring()));
                       }};
    return out;
}

namespace {

// Shared trunk of the two kernel constructions: validates E against the
// derivation L, inverts K = L + E, and assembles (A <=> ker(E)).
FtcPairInstance buildKernelPair(std::string name, const CarrierDescriptor& algebra,
                                const LinearOperator& L, const LinearOperator& E,
                                const std::optional<LinearOperator>& Kinverse,
                                const Sampler& algebraSampler,
                                const std::vector<CarrierElement>& algebraEnum,
                                const CheckConfig& cfg, int degreeBound) {
    const auto Em = E.map;
    const auto Lm = L.map;
    const CarrierElement one = oneOf(algebra);
    const CarrierElement zero = zeroOf(algebra);

    LawReport pre{.law = "derivation-construction-preconditions", .instance = name,
                  .seed = cfg.seed};
    runUnaryClause(pre, "E(1) = 1", {one}, algebraSampler, {cfg.seed, 0},
                   [Em, one](const CarrierElement&) -> std::pair<CarrierElement, CarrierElement> {
                       return {Em(one), one};
                   });
    runUnaryClause(pre, "E idempotent", algebraEnum, algebraSampler, cfg,
                   [Em](const CarrierElement& a) { return std::pair(Em(Em(a)), Em(a)); });
    runBinaryClause(pre, "E multiplicative", algebraEnum, algebraSampler, algebraEnum,
                    algebraSampler, cfg, [Em](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(Em(mul(a, b)), mul(Em(a), Em(b)));
                    });
    runUnaryClause(pre, "L(E(a)) = 0", algebraEnum, algebraSampler, cfg,
                   [Lm, Em, zero](const CarrierElement& a) {
                       return std::pair(Lm(Em(a)), zero);
                   });
    runUnaryClause(pre, "E(L(a)) = 0", algebraEnum, algebraSampler, cfg,
                   [Lm, Em, zero](const CarrierElement& a) {
                       return std::pair(Em(Lm(a)), zero);
                   });
    runBinaryClause(pre, "L satisfies Leibniz", algebraEnum, algebraSampler, algebraEnum,
                    algebraSampler, cfg, [Lm](const CarrierElement& a, const CarrierElement& b) {
                        return std::pair(Lm(mul(a, b)), add(mul(a, Lm(b)), mul(b, Lm(a))));
                    });
    if (!pre.holds)
        throw InvalidInstanceError("derivation-construction preconditions fail on " + name,
                                   {pre});

    LinearOperator K = sumOps(L, E);
    K.name = "K";
    LinearOperator Kinv = Kinverse ? *Kinverse : invertKGraded(K, degreeBound);

    LawReport inverse{.law = "K-inverse-validation", .instance = name, .seed = cfg.seed};
    runUnaryClause(inverse, "K^-1(K(a)) = a", algebraEnum, algebraSampler, cfg,
                   [Km = K.map, Kim = Kinv.map](const CarrierElement& a) {
                       return std::pair(Kim(Km(a)), a);
                   });
    runUnaryClause(inverse, "K(K^-1(a)) = a", algebraEnum, algebraSampler, cfg,
                   [Km = K.map, Kim = Kinv.map](const CarrierElement& a) {
                       return std::pair(Km(Kim(a)), a);
                   });
    if (!inverse.holds)
        throw InvalidInstanceError("K-inverse validation fails on " + name, {inverse});

    FtcPairInstance pair;
    pair.name = std::move(name);
    pair.algebra = algebra;
    pair.module = algebra;  // ker(E) inside A; membership below
    pair.action = [](const CarrierElement& a, const CarrierElement& m) { return mul(a, m); };
    pair.derivation = {"L", algebra, algebra, Lm};
    pair.integration = {"K^-1", algebra, algebra, Kinv.map};
    pair.algebraSampler = algebraSampler;
    pair.algebraEnum = algebraEnum;
    pair.moduleMembership = kerEAnnihilated(E);
    pair.moduleSampler = [Em, algebraSampler](SampleRng& rng) {
        CarrierElement a = algebraSampler(rng);
        return sub(a, Em(a));  // (id - E) lands in ker(E) and fixes it pointwise
    };
    for (const auto& a : algebraEnum) {
        CarrierElement m = sub(a, Em(a));
        bool seen = false;
        for (const auto& x : pair.moduleEnum) seen = seen || x == m;
        if (!seen) pair.moduleEnum.push_back(std::move(m));
    }

    auto bad = [&] {
        std::vector<LawReport> out;
        for (auto& r : checkAllLaws(pair, cfg))
            if (!r.holds) out.push_back(std::move(r));
        return out;
    }();
    if (!bad.empty())
        throw InvalidInstanceError("constructed pair fails the law suite on " + pair.name,
                                   std::move(bad));
    return pair;
}

}  // namespace

FtcPairInstance ftcFromDerivation(const DerivationConstructionInput& input,
                                  const CheckConfig& cfg, int degreeBound) {
    const auto Dm = input.D.map;
    const auto Dcm = input.Dcirc.map;
    const auto Em = input.E.map;
    const CarrierElement zeroA = zeroOf(input.algebra);
    const CarrierElement zeroM = zeroOf(input.module);

    LawReport pre{.law = "dual-type-preconditions", .instance = input.name, .seed = cfg.seed};
    runBinaryClause(pre, "D* is A-linear", input.algebraEnum, input.algebraSampler,
                    input.moduleEnum, input.moduleSampler, cfg,
                    [Dcm, act = input.action](const CarrierElement& a, const CarrierElement& m) {
                        return std::pair(Dcm(act(a, m)), mul(a, Dcm(m)));
                    });
    runUnaryClause(pre, "E(D*(m)) = 0", input.moduleEnum, input.moduleSampler, cfg,
                   [Dcm, Em, zeroA](const CarrierElement& m) {
                       return std::pair(Em(Dcm(m)), zeroA);
                   });
    runUnaryClause(pre, "D(E(a)) = 0", input.algebraEnum, input.algebraSampler, cfg,
                   [Dm, Em, zeroM](const CarrierElement& a) {
                       return std::pair(Dm(Em(a)), zeroM);
                   });
    if (!pre.holds)
        throw InvalidInstanceError("dual-type preconditions fail on " + input.name, {pre});

    LinearOperator L = composeOps(input.Dcirc, input.D);
    L.name = "L";
    return buildKernelPair(input.name, input.algebra, L, input.E, input.Kinverse,
                           input.algebraSampler, input.algebraEnum, cfg, degreeBound);
}

FtcPairInstance ftcFromDiffAlgebra(std::string name, const LinearOperator& D,
                                   const LinearOperator& E, const Sampler& algebraSampler,
                                   const std::vector<CarrierElement>& algebraEnum,
                                   const CheckConfig& cfg, int degreeBound) {
    return buildKernelPair(std::move(name), D.domain, D, E, std::nullopt, algebraSampler,
                           algebraEnum, cfg, degreeBound);
}

DerivationConstructionInput polyDerivationConstructionInput(const RingDescriptor& ring) {
    const CarrierDescriptor poly = CarrierDescriptor::polynomial(ring);
    DerivationConstructionInput in;
    in.name = "poly-derivation-construction";
    if (!(ring == RingDescriptor::rationals())) in.name += "(" + ring.str() + ")";
    in.algebra = poly;
    in.module = poly;
    in.action = [](const CarrierElement& a, const CarrierElement& m) { return polyMul(a, m); };
    in.D = polyDerivation(poly);
    in.Dcirc = {"mul-x", poly, poly, [poly](const CarrierElement& p) {
                    return polyMul(p, polyMonomial(poly, 1, Scalar::one(poly.ring())));
                }};
    in.E = {"eval0", poly, poly, [poly](const CarrierElement& p) {
                auto it = p.poly().coeffs.find(0);
                std::map<long, Scalar> m;
                if (it != p.poly().coeffs.end()) m.emplace(0, it->second);
                return makePolynomial(poly, std::move(m));
            }};
    in.algebraSampler = defaultSampler(poly);
    in.moduleSampler = defaultSampler(poly);
    in.algebraEnum = smallEnumeration(poly);
    in.moduleEnum = smallEnumeration(poly);
    return in;
}

FtcPairInstance hurwitzEulerPair(const CarrierDescriptor& base, const CheckConfig& cfg,
                                 int degreeBound) {
    const CarrierDescriptor h = CarrierDescriptor::hurwitz(base);
    LinearOperator D{"euler", h, h,
                     [](const CarrierElement& f) { return hurwitzEulerScale(f); }};
    LinearOperator E{"head", h, h, [h](const CarrierElement& f) {
                         if (f.hurwitz().entries.empty()) return zeroOf(h);
                         return makeHurwitz(h, {f.hurwitz().entries[0]});
                     }};
    return ftcFromDiffAlgebra("hurwitz-euler(" + base.str() + ")", D, E, defaultSampler(h),
                              smallEnumeration(h), cfg, degreeBound);
}

}  // namespace ftczin
