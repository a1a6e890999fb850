#include "residue/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "residue/zfactor.hpp"

namespace parshin {

std::shared_ptr<const FieldExt> FieldExt::create(UPoly<Rational> m, std::string generatorName) {
    if (m.isZero() || !m.lc().isOne())
        throw DomainError("minimal polynomial must be monic");
    if (m.degree() < 2) throw DomainError("degree-1 extension collapses to Q");
    if (!isIrreducibleOverQ(m)) throw DomainError("minimal polynomial is reducible over Q");
    return std::shared_ptr<const FieldExt>(new FieldExt(std::move(m), std::move(generatorName)));
}

std::string FieldExt::minPolyText() const {
    std::ostringstream os;
    bool first = true;
    for (long i = minPoly_.degree(); i >= 0; --i) {
        Rational c = minPoly_.coeff(static_cast<std::size_t>(i));
        if (c.isZero()) continue;
        if (!first) os << (c.sign() > 0 ? "+" : "");
        std::string cs = c.str();
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << cs << "*";
            }
            os << name_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool sameField(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minPoly() == b->minPoly();
}

FieldPtr commonField(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (sameField(a, b)) return a;
    throw DomainError("coefficient-field mismatch: " + a->minPolyText() + " vs " +
                      b->minPolyText());
}

AlgNumber::AlgNumber(FieldPtr ext, std::vector<Rational> coeffs) : ext_(std::move(ext)) {
    if (!ext_) {
        if (coeffs.size() != 1) throw DomainError("rational AlgNumber needs one coefficient");
        c_ = std::move(coeffs);
        return;
    }
    std::size_t d = static_cast<std::size_t>(ext_->degree());
    if (coeffs.size() > d) throw DomainError("AlgNumber coefficient vector too long");
    coeffs.resize(d, Rational(0));
    c_ = std::move(coeffs);
}

AlgNumber AlgNumber::generator(const FieldPtr& ext) {
    if (!ext) throw DomainError("generator of Q requested");
    std::vector<Rational> c(static_cast<std::size_t>(ext->degree()), Rational(0));
    c[1] = Rational(1);
    return AlgNumber(ext, std::move(c));
}

bool AlgNumber::isZero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.isZero(); });
}

bool AlgNumber::isOne() const {
    if (!c_[0].isOne()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].isZero()) return false;
    return true;
}

Rational AlgNumber::rationalValue() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].isZero()) throw DomainError("algebraic number is not rational: " + str());
    return c_[0];
}

AlgNumber AlgNumber::lifted(const FieldPtr& ext) const {
    if (sameField(ext_, ext)) return *this;
    if (ext_) throw DomainError("coefficient-field mismatch");
    std::vector<Rational> c(ext ? static_cast<std::size_t>(ext->degree()) : 1, Rational(0));
    c[0] = c_[0];
    AlgNumber r;
    r.ext_ = ext;
    r.c_ = std::move(c);
    return r;
}

AlgNumber AlgNumber::operator-() const {
    AlgNumber r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

AlgNumber AlgNumber::operator+(const AlgNumber& o) const {
    FieldPtr f = commonField(ext_, o.ext_);
    AlgNumber a = lifted(f), b = o.lifted(f);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

AlgNumber AlgNumber::operator-(const AlgNumber& o) const { return *this + (-o); }

AlgNumber AlgNumber::operator*(const AlgNumber& o) const {
    FieldPtr f = commonField(ext_, o.ext_);
    AlgNumber a = lifted(f), b = o.lifted(f);
    if (!f) {
        a.c_[0] *= b.c_[0];
        return a;
    }
    UPoly<Rational> pa{std::vector<Rational>(a.c_)}, pb{std::vector<Rational>(b.c_)};
    UPoly<Rational> prod = (pa * pb) % f->minPoly();
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i) c[i] = prod.coeffs()[i];
    return AlgNumber(f, std::move(c));
}

AlgNumber AlgNumber::inv() const {
    if (isZero()) throw DomainError("inverse of zero algebraic number");
    if (!ext_) {
        AlgNumber r = *this;
        r.c_[0] = r.c_[0].inv();
        return r;
    }
    UPoly<Rational> v{std::vector<Rational>(c_)};
    UPoly<Rational> g, s, t;
    extendedGcd(v, ext_->minPoly(), g, s, t);
    if (g.degree() != 0) throw DomainError("minimal polynomial not irreducible");
    UPoly<Rational> invP = s.scaled(g.lc().inv()) % ext_->minPoly();
    std::vector<Rational> c(static_cast<std::size_t>(ext_->degree()), Rational(0));
    for (std::size_t i = 0; i < invP.coeffs().size(); ++i) c[i] = invP.coeffs()[i];
    return AlgNumber(ext_, std::move(c));
}

Rational AlgNumber::traceToQ() const {
    if (!ext_) return c_[0];
    long d = ext_->degree();
    Rational tr(0);
    // trace of the multiplication matrix: sum over basis vectors θ^i of the
    // θ^i-coordinate of this * θ^i
    AlgNumber pw(Rational(1));
    pw = pw.lifted(ext_);
    AlgNumber gen = generator(ext_);
    for (long i = 0; i < d; ++i) {
        AlgNumber prod = *this * pw;
        tr += prod.c_[static_cast<std::size_t>(i)];
        pw = pw * gen;
    }
    return tr;
}

bool AlgNumber::orderedBefore(const AlgNumber& o) const {
    std::string ta = ext_ ? ext_->minPolyText() : "";
    std::string tb = o.ext_ ? o.ext_->minPolyText() : "";
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) {
        Rational a = i < c_.size() ? c_[i] : Rational(0);
        Rational b = i < o.c_.size() ? o.c_[i] : Rational(0);
        if (a != b) return a < b;
    }
    return false;
}

std::string AlgNumber::str() const {
    if (!ext_) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isZero()) continue;
        if (!first) os << (c_[i].sign() > 0 ? "+" : "");
        std::string cs = c_[i].str();
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << cs << "*";
            }
            os << ext_->generatorName();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AlgNumber operator*(long n, const AlgNumber& a) { return AlgNumber(n) * a; }

UPoly<AlgNumber> liftPoly(const UPoly<Rational>& p) {
    std::vector<AlgNumber> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return UPoly<AlgNumber>(std::move(c));
}

UPoly<Rational> lowerPoly(const UPoly<AlgNumber>& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.rationalValue());
    return UPoly<Rational>(std::move(c));
}

namespace {

// Trager's method: factor a monic squarefree p over Q(θ) by factoring the
// norm of p(c - λθ) over Q for a λ that makes the norm squarefree.
std::vector<UPoly<AlgNumber>> factorSquarefreeExt(const UPoly<AlgNumber>& p,
                                                  const FieldPtr& ext) {
    using QP = UPoly<Rational>;
    using QQP = UPoly<QP>;  // polynomials in z with coefficients in Q[c]

    const QP& m = ext->minPoly();
    for (long lambda = 0;; ++lambda) {
        if (lambda > 200) throw DomainError("no squarefree norm shift found");
        // build p(c - λz) with θ -> z, as an element of (Q[c])[z]
        QQP acc;  // result
        // (c - λz)^j expanded incrementally
        QQP cm{std::vector<QP>{QP::x(), QP(Rational(-lambda))}};  // c - λz
        QQP pw{std::vector<QP>{QP(1)}};
        for (long j = 0; j <= p.degree(); ++j) {
            const AlgNumber& aj = p.coeff(static_cast<std::size_t>(j));
            // a_j(θ) -> a_j(z): poly in z with coefficients constant in c
            std::vector<QP> az;
            for (const Rational& r : aj.coeffs()) az.emplace_back(QP(r));
            acc = acc + QQP(az) * pw;
            pw = pw * cm;
        }
        // m(z) as element of (Q[c])[z]
        std::vector<QP> mz;
        for (const Rational& r : m.coeffs()) mz.emplace_back(QP(r));
        QP norm = resultant(QQP(mz), acc);
        if (norm.degree() != p.degree() * m.degree()) continue;
        if (gcdPoly(norm, norm.derivative()).degree() != 0) continue;

        auto qf = factorOverQ(norm);
        std::vector<UPoly<AlgNumber>> out;
        AlgNumber shift = AlgNumber(Rational(lambda)) * AlgNumber::generator(ext);
        for (const auto& [h, mult] : qf.factors) {
            (void)mult;  // norm is squarefree
            UPoly<AlgNumber> hImage = liftPoly(h).shiftArg(shift);  // h(c + λθ)
            UPoly<AlgNumber> g = gcdPoly(p, hImage);
            if (g.degree() > 0) out.push_back(g.monic());
        }
        return out;
    }
}

}  // namespace

std::vector<std::pair<UPoly<AlgNumber>, long>> factorOverField(const UPoly<AlgNumber>& p,
                                                               const FieldPtr& ext) {
    if (p.isZero()) throw DomainError("factorization of zero polynomial");
    std::vector<std::pair<UPoly<AlgNumber>, long>> out;
    if (!ext) {
        for (const auto& [f, mu] : factorOverQ(lowerPoly(p)).factors)
            out.emplace_back(liftPoly(f), mu);
        return out;
    }
    for (const auto& [part, mu] : squarefreeDecompose(p)) {
        for (const auto& irr : factorSquarefreeExt(part, ext)) out.emplace_back(irr, mu);
    }
    return out;
}

std::vector<std::pair<AlgNumber, long>> rootsInField(const UPoly<AlgNumber>& p,
                                                     const FieldPtr& ext) {
    std::vector<std::pair<AlgNumber, long>> roots;
    for (const auto& [f, mu] : factorOverField(p, ext)) {
        if (f.degree() == 1) roots.emplace_back(-f.coeff(0), mu);
    }
    return roots;
}

}  // namespace parshin
