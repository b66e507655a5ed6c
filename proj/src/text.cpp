#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "ftczin/element.hpp"

// Canonical element text and its parser. Grammar summary:
//   scalar     p/q | n | n mod m
//   polynomial 3/2*x^2 + x + 1          (descending degree)
//   hurwitz    (a0, a1, ..., aN)        (zero is "()")
//   tensor     c1*[i,j] + [k] + c0*1    ((length, lex) word order, unit last)
//   finite     2*y^2 + y + 1            (descending basis index)
//   semidirect (a | z)
// Coefficients inside composite carriers print bare (modular values as their
// reduced representative); standalone scalar-ring elements use the full form.

namespace ftczin {

namespace {

// ---- printing -------------------------------------------------------------

std::string coeffText(const Scalar& c) {
    if (c.ring().tag == RingTag::Modular) return c.numerator().get_str();
    return c.str();
}

struct Term {
    bool negative;
    std::string body;
};

std::string joinTerms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            s += terms[i].negative ? "-" + terms[i].body : terms[i].body;
        else
            s += (terms[i].negative ? " - " : " + ") + terms[i].body;
    }
    return s;
}

Term scaledTerm(const Scalar& c, const std::string& symbol) {
    bool neg = c.isNegative();
    Scalar mag = c.absValue();
    if (symbol.empty()) return {neg, coeffText(mag)};
    if (mag.isOne()) return {neg, symbol};
    return {neg, coeffText(mag) + "*" + symbol};
}

std::string polyText(const CarrierElement& x) {
    std::vector<Term> terms;
    const auto& m = x.poly().coeffs;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        long d = it->first;
        std::string sym = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
        terms.push_back(scaledTerm(it->second, sym));
    }
    return joinTerms(terms);
}

std::string tensorText(const CarrierElement& x) {
    std::vector<Term> terms;
    for (const auto& [w, c] : x.tensor().words) terms.push_back(scaledTerm(c, w.str()));
    const Scalar& u = x.tensor().unit;
    if (!u.isZero()) terms.push_back(scaledTerm(u, "1"));
    return joinTerms(terms);
}

std::string finiteText(const CarrierElement& x) {
    const StructureTable& tab = *x.descriptor().table();
    std::vector<Term> terms;
    const auto& m = x.finite().coords;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        std::string sym = it->first == tab.unitIndex ? "" : tab.names[it->first];
        terms.push_back(scaledTerm(it->second, sym));
    }
    return joinTerms(terms);
}

// ---- parsing --------------------------------------------------------------

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i == s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, i);
    }
    Integer digits() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits", start);
        return Integer(std::string(s.substr(start, i - start)));
    }
};

// Unsigned coefficient literal: digits, optionally /digits over the rationals.
Scalar coeffLiteral(Cursor& c, const RingDescriptor& ring) {
    Integer num = c.digits();
    if (ring.tag == RingTag::Rationals && c.peek() == '/') {
        c.eat('/');
        Integer den = c.digits();
        return Scalar::rational(num, den);
    }
    switch (ring.tag) {
        case RingTag::Rationals: return Scalar::rational(num, 1);
        case RingTag::Integers: return Scalar::integer(num);
        case RingTag::Modular: return Scalar::modular(num, ring.modulus);
    }
    throw Error("unreachable ring tag");
}

Word parseWord(Cursor& c, int basisSize) {
    c.expect('[', "to open a word");
    Word w;
    while (true) {
        Integer l = c.digits();
        if (l >= basisSize)
            throw ParseError("letter " + l.get_str() + " outside basis of size " +
                                 std::to_string(basisSize),
                             c.i);
        w.letters.push_back(static_cast<int>(l.get_si()));
        if (c.eat(']')) break;
        c.expect(',', "between word letters");
    }
    return w;
}

// Sum-of-terms loop shared by the polynomial, tensor and finite grammars.
// parseTerm consumes one unsigned term and folds it into the accumulator.
template <typename TermFn>
void parseSum(Cursor& c, TermFn parseTerm) {
    bool negative = c.eat('-');
    while (true) {
        parseTerm(negative);
        if (c.done()) break;
        if (c.eat('+'))
            negative = false;
        else if (c.eat('-'))
            negative = true;
        else
            throw ParseError("expected '+' or '-' between terms", c.i);
    }
}

CarrierElement parsePolynomial(Cursor& c, const CarrierDescriptor& desc) {
    std::map<long, Scalar> coeffs;
    auto addTerm = [&](long deg, Scalar v) {
        auto it = coeffs.find(deg);
        if (it == coeffs.end())
            coeffs.emplace(deg, std::move(v));
        else
            it->second = it->second + v;
    };
    parseSum(c, [&](bool negative) {
        Scalar coeff = Scalar::one(desc.ring());
        bool sawCoeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = coeffLiteral(c, desc.ring());
            sawCoeff = true;
            if (!c.eat('*')) {
                addTerm(0, negative ? -coeff : coeff);
                return;
            }
        }
        if (c.peek() != 'x') {
            if (sawCoeff) throw ParseError("expected 'x' after '*'", c.i);
            throw ParseError("expected a polynomial term", c.i);
        }
        c.eat('x');
        long deg = 1;
        if (c.eat('^')) {
            Integer d = c.digits();
            deg = d.get_si();
        }
        addTerm(deg, negative ? -coeff : coeff);
    });
    return makePolynomial(desc, std::move(coeffs));
}

CarrierElement parseTensor(Cursor& c, const CarrierDescriptor& desc) {
    std::map<Word, Scalar> words;
    Scalar unit = Scalar::zero(desc.ring());
    auto addWord = [&](Word w, Scalar v) {
        auto it = words.find(w);
        if (it == words.end())
            words.emplace(std::move(w), std::move(v));
        else
            it->second = it->second + v;
    };
    parseSum(c, [&](bool negative) {
        Scalar coeff = Scalar::one(desc.ring());
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            // "1" alone denotes the unit term; anything else is a coefficient.
            coeff = coeffLiteral(c, desc.ring());
            if (!c.eat('*')) {
                if (c.peek() == '[') throw ParseError("expected '*' before word", c.i);
                unit = unit + (negative ? -coeff : coeff);
                return;
            }
            if (c.eat('1')) {  // explicit unit term "c*1"
                unit = unit + (negative ? -coeff : coeff);
                return;
            }
        }
        Word w = parseWord(c, desc.basisSize());
        addWord(std::move(w), negative ? -coeff : coeff);
    });
    return makeTensor(desc, std::move(words), std::move(unit));
}

CarrierElement parseFinite(Cursor& c, const CarrierDescriptor& desc) {
    const StructureTable& tab = *desc.table();
    // Longest-first so "y^2" wins over "y".
    std::vector<std::size_t> order(tab.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return tab.names[a].size() > tab.names[b].size();
    });
    auto matchName = [&](Cursor& cur) -> std::optional<std::size_t> {
        cur.skip();
        for (std::size_t idx : order) {
            const std::string& n = tab.names[idx];
            if (idx == tab.unitIndex) continue;
            if (cur.s.substr(cur.i, n.size()) == n) {
                cur.i += n.size();
                return idx;
            }
        }
        return std::nullopt;
    };
    std::map<std::size_t, Scalar> coords;
    auto addCoord = [&](std::size_t i, Scalar v) {
        auto it = coords.find(i);
        if (it == coords.end())
            coords.emplace(i, std::move(v));
        else
            it->second = it->second + v;
    };
    parseSum(c, [&](bool negative) {
        Scalar coeff = Scalar::one(desc.ring());
        bool sawCoeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = coeffLiteral(c, desc.ring());
            sawCoeff = true;
            if (!c.eat('*')) {
                addCoord(tab.unitIndex, negative ? -coeff : coeff);
                return;
            }
        }
        auto idx = matchName(c);
        if (!idx) {
            if (sawCoeff && c.eat('1')) {  // "c*1"
                addCoord(tab.unitIndex, negative ? -coeff : coeff);
                return;
            }
            throw ParseError("expected a basis monomial name", c.i);
        }
        addCoord(*idx, negative ? -coeff : coeff);
    });
    return makeFinite(desc, std::move(coords));
}

// Splits "( a, b, c )" or "( a | z )" content at top-level separators.
std::vector<std::string_view> splitTopLevel(std::string_view body, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(body.substr(start));
    return parts;
}

std::string_view trimView(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
}

std::string_view parenBody(std::string_view text) {
    std::string_view t = trimView(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("expected a parenthesized element", 0);
    return t.substr(1, t.size() - 2);
}

}  // namespace

std::string toText(const CarrierElement& x) {
    switch (x.descriptor().kind()) {
        case CarrierKind::Scalar: return x.scalar().str();
        case CarrierKind::Polynomial: return polyText(x);
        case CarrierKind::Hurwitz: {
            std::string s = "(";
            const auto& e = x.hurwitz().entries;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) s += ", ";
                s += toText(e[i]);
            }
            return s + ")";
        }
        case CarrierKind::Tensor: return tensorText(x);
        case CarrierKind::Finite: return finiteText(x);
        case CarrierKind::Semidirect:
            return "(" + toText(x.semi().parts[0]) + " | " + toText(x.semi().parts[1]) + ")";
    }
    return "?";
}

CarrierElement parseElement(std::string_view text, const CarrierDescriptor& desc) {
    switch (desc.kind()) {
        case CarrierKind::Scalar:
            return makeScalar(desc, Scalar::parse(text, desc.ring()));
        case CarrierKind::Polynomial: {
            Cursor c{text};
            CarrierElement r = parsePolynomial(c, desc);
            if (!c.done()) throw ParseError("trailing input", c.i);
            return r;
        }
        case CarrierKind::Tensor: {
            Cursor c{text};
            CarrierElement r = parseTensor(c, desc);
            if (!c.done()) throw ParseError("trailing input", c.i);
            return r;
        }
        case CarrierKind::Finite: {
            Cursor c{text};
            CarrierElement r = parseFinite(c, desc);
            if (!c.done()) throw ParseError("trailing input", c.i);
            return r;
        }
        case CarrierKind::Hurwitz: {
            std::string_view t = trimView(text);
            if (t == "0") return zeroOf(desc);
            std::string_view body = trimView(parenBody(t));
            std::vector<CarrierElement> entries;
            if (!body.empty())
                for (std::string_view part : splitTopLevel(body, ','))
                    entries.push_back(parseElement(trimView(part), desc.hurwitzBase()));
            return makeHurwitz(desc, std::move(entries));
        }
        case CarrierKind::Semidirect: {
            std::string_view body = parenBody(text);
            auto parts = splitTopLevel(body, '|');
            if (parts.size() != 2)
                throw ParseError("semidirect element needs exactly one top-level '|'", 0);
            return makeSemidirect(desc, parseElement(trimView(parts[0]), desc.semi().algebra),
                                  parseElement(trimView(parts[1]), desc.semi().module));
        }
    }
    throw Error("unreachable carrier kind");
}

}  // namespace ftczin
