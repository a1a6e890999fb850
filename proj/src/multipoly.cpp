#include "residue/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "residue/errors.hpp"

namespace parshin {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    // tie-break: compare from the last variable down, so among equal total
    // degree the term with more t sorts higher
    for (std::size_t i = a.size(); i-- > 0;) {
        int ea = i < a.size() ? a[i] : 0;
        int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.isZero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

MultiPoly MultiPoly::constant(AlgNumber c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (!c.isZero()) p.terms_.emplace(std::vector<int>(p.vars_.size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw DomainError("unknown variable: " + name);
    std::vector<int> e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
    p.terms_.emplace(std::move(e), AlgNumber(1));
    return p;
}

bool MultiPoly::isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

AlgNumber MultiPoly::constantValue() const {
    if (terms_.empty()) return AlgNumber(0);
    if (!isConstant()) throw DomainError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

long MultiPoly::totalDegree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0L);
}

long MultiPoly::degreeIn(std::size_t varIndex) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[varIndex]));
    return d;
}

FieldPtr MultiPoly::coefficientField() const {
    FieldPtr f;
    for (const auto& [e, c] : terms_) f = commonField(f, c.ext());
    return f;
}

void MultiPoly::insertTerm(std::vector<int> exp, AlgNumber c) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.isZero()) terms_.emplace(std::move(exp), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("variable-list mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insertTerm(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("variable-list mismatch");
    MultiPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insertTerm(std::move(e), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const AlgNumber& c) const {
    MultiPoly r(vars_);
    if (c.isZero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw DomainError("negative exponent");
    MultiPoly acc = constant(AlgNumber(1), vars_);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return (*this - o).isZero(); }

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw DomainError("unknown variable: " + var);
    std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        std::vector<int> e2 = e;
        e2[vi] -= 1;
        r.insertTerm(std::move(e2), c * AlgNumber(e[vi]));
    }
    return r;
}

AlgNumber MultiPoly::eval(const std::vector<AlgNumber>& point) const {
    if (point.size() != vars_.size()) throw DomainError("evaluation arity mismatch");
    AlgNumber acc(0);
    for (const auto& [e, c] : terms_) {
        AlgNumber t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::shifted(const std::vector<AlgNumber>& offset) const {
    if (offset.size() != vars_.size()) throw DomainError("shift arity mismatch");
    MultiPoly acc(vars_);
    std::vector<MultiPoly> shiftedVars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        shiftedVars.push_back(variable(vars_[i], vars_) + constant(offset[i], vars_));
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(c, vars_);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * shiftedVars[i];
        acc = acc + t;
    }
    return acc;
}

AlgNumber MultiPoly::leadingCoeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

UPoly<UPoly<AlgNumber>> MultiPoly::toRecursive() const {
    if (vars_.size() != 2) throw DomainError("recursive view needs two variables");
    long dt = degreeIn(1);
    std::vector<UPoly<AlgNumber>> outer(static_cast<std::size_t>(dt + 1), UPoly<AlgNumber>());
    if (dt < 0) return UPoly<UPoly<AlgNumber>>();
    std::vector<std::vector<AlgNumber>> rows(static_cast<std::size_t>(dt + 1));
    for (const auto& [e, c] : terms_) {
        auto& row = rows[static_cast<std::size_t>(e[1])];
        if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(static_cast<std::size_t>(e[0]) + 1, AlgNumber(0));
        row[static_cast<std::size_t>(e[0])] = c;
    }
    for (std::size_t j = 0; j < rows.size(); ++j) outer[j] = UPoly<AlgNumber>(std::move(rows[j]));
    return UPoly<UPoly<AlgNumber>>(std::move(outer));
}

MultiPoly MultiPoly::fromRecursive(const UPoly<UPoly<AlgNumber>>& p,
                                   std::vector<std::string> vars) {
    MultiPoly r(std::move(vars));
    if (r.vars_.size() != 2) throw DomainError("recursive view needs two variables");
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const auto& inner = p.coeffs()[j];
        for (std::size_t i = 0; i < inner.coeffs().size(); ++i) {
            const AlgNumber& c = inner.coeffs()[i];
            if (!c.isZero()) r.insertTerm({static_cast<int>(i), static_cast<int>(j)}, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::swappedVars() const {
    if (vars_.size() != 2) throw DomainError("swap needs two variables");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(std::vector<int>{e[1], e[0]}, c);
    return r;
}

std::optional<MultiPoly> MultiPoly::tryDivide(const MultiPoly& d) const {
    if (d.isZero()) return std::nullopt;
    if (isZero()) return MultiPoly(vars_);
    if (d.isConstant()) return scaled(d.constantValue().inv());
    try {
        if (d.degreeIn(1) == 0) {
            // divisor is univariate in s: divide t-coefficient-wise
            auto rec = toRecursive();
            UPoly<AlgNumber> ds;
            {
                auto drec = d.toRecursive();
                ds = drec.coeff(0);
            }
            std::vector<UPoly<AlgNumber>> q;
            for (const auto& row : rec.coeffs()) {
                auto [qq, rr] = row.divmod(ds);
                if (!rr.isZero()) return std::nullopt;
                q.push_back(qq);
            }
            return fromRecursive(UPoly<UPoly<AlgNumber>>(std::move(q)), vars_);
        }
        auto q = exactDivCoeff(toRecursive(), d.toRecursive());
        return fromRecursive(q, vars_);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = false;
        if (c.isRational() && c.rationalValue().sign() < 0) {
            neg = true;
            cs = (-c).str();
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool anyVar = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool coeffIsOne = (cs == "1");
        bool needParen = !c.isRational();
        if (!anyVar || !coeffIsOne) {
            if (needParen) os << "(" << c.str() << ")";
            else os << cs;
            if (anyVar) os << "*";
        }
        bool firstVar = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstVar) os << "*";
            firstVar = false;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// --- parser ---------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;
    bool allowDivision;

    void skipWs() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skipWs();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skipWs();
        return pos < text.size() ? text[pos] : '\0';
    }

    ParsedRatio parse() {
        ParsedRatio r = parseExpr();
        skipWs();
        if (pos != text.size()) throw ParseError("unexpected character", pos);
        return r;
    }

    ParsedRatio one() const {
        return {MultiPoly::constant(AlgNumber(1), vars), MultiPoly::constant(AlgNumber(1), vars)};
    }

    static ParsedRatio mul(const ParsedRatio& a, const ParsedRatio& b) {
        return {a.num * b.num, a.den * b.den};
    }
    static ParsedRatio div(const ParsedRatio& a, const ParsedRatio& b, std::size_t at) {
        if (b.num.isZero()) throw ParseError("division by zero", at);
        return {a.num * b.den, a.den * b.num};
    }
    static ParsedRatio add(const ParsedRatio& a, const ParsedRatio& b, bool minus) {
        MultiPoly n = minus ? a.num * b.den - b.num * a.den : a.num * b.den + b.num * a.den;
        return {n, a.den * b.den};
    }

    ParsedRatio parseExpr() {
        ParsedRatio acc = parseTerm();
        while (true) {
            skipWs();
            if (eat('+'))
                acc = add(acc, parseTerm(), false);
            else if (eat('-'))
                acc = add(acc, parseTerm(), true);
            else
                break;
        }
        return acc;
    }

    ParsedRatio parseTerm() {
        ParsedRatio acc = parseFactor();
        while (true) {
            skipWs();
            if (eat('*')) {
                acc = mul(acc, parseFactor());
            } else if (peek() == '/') {
                std::size_t at = pos;
                if (!allowDivision)
                    throw ParseError("division inside a polynomial context", at);
                ++pos;
                acc = div(acc, parseFactor(), at);
            } else {
                break;
            }
        }
        return acc;
    }

    ParsedRatio parseFactor() {
        // unary minus binds looser than '^': -s^4 = -(s^4)
        skipWs();
        if (pos < text.size() && text[pos] == '-') {
            ++pos;
            ParsedRatio f = parseFactor();
            return {-f.num, f.den};
        }
        ParsedRatio b = parseBase();
        skipWs();
        if (eat('^')) {
            skipWs();
            std::size_t start = pos;
            long e = parseNatural();
            if (e < 0) throw ParseError("exponent must be a natural number", start);
            return {b.num.pow(e), b.den.pow(e)};
        }
        return b;
    }

    long parseNatural() {
        skipWs();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return std::stol(text.substr(start, pos - start));
    }

    ParsedRatio parseBase() {
        skipWs();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '-') {
            ++pos;
            ParsedRatio b = parseBase();
            return {-b.num, b.den};
        }
        if (c == '(') {
            std::size_t at = pos;
            ++pos;
            ParsedRatio e = parseExpr();
            if (!eat(')')) throw ParseError("unbalanced parenthesis", at);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            long n = parseNatural();
            // rational literal: integer "/" positive-integer, only when the
            // grammar-level division operator is unavailable
            if (!allowDivision && peek() == '/') {
                std::size_t save = pos;
                ++pos;
                skipWs();
                if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    long d = parseNatural();
                    if (d <= 0) throw ParseError("denominator must be positive", save);
                    return {MultiPoly::constant(AlgNumber(Rational(n, d)), vars),
                            MultiPoly::constant(AlgNumber(1), vars)};
                }
                throw ParseError("expected positive integer after '/'", save);
            }
            (void)start;
            return {MultiPoly::constant(AlgNumber(n), vars),
                    MultiPoly::constant(AlgNumber(1), vars)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (std::find(vars.begin(), vars.end(), name) == vars.end())
                throw ParseError("unknown variable '" + name + "'", start);
            return {MultiPoly::variable(name, vars), MultiPoly::constant(AlgNumber(1), vars)};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

MultiPoly parseExpression(const std::string& text, std::vector<std::string> vars) {
    Parser p{text, 0, vars, false};
    ParsedRatio r = p.parse();
    if (!r.den.isConstant())
        throw ParseError("division inside a polynomial context", 0);
    return r.num.scaled(r.den.constantValue().inv());
}

ParsedRatio parseRationalExpression(const std::string& text, std::vector<std::string> vars) {
    Parser p{text, 0, vars, true};
    return p.parse();
}

}  // namespace parshin
