#include "residue/ratfunc.hpp"

#include <algorithm>

#include "residue/errors.hpp"
#include "residue/zfactor.hpp"

namespace parshin {

namespace {

using Inner = UPoly<AlgNumber>;        // polynomials in s
using Rec = UPoly<Inner>;              // polynomials in t with Inner coefficients

Inner contentOf(const Rec& p) {
    Inner c;
    for (const auto& row : p.coeffs()) c = gcdPoly(c, row);
    return c;  // monic (or zero)
}

Rec divideContent(const Rec& p, const Inner& c) {
    if (c.degree() == 0) return p;
    std::vector<Inner> rows;
    rows.reserve(p.coeffs().size());
    for (const auto& row : p.coeffs()) {
        auto [q, r] = row.divmod(c);
        if (!r.isZero()) throw DomainError("content division failed");
        rows.push_back(q);
    }
    return Rec(std::move(rows));
}

Rec primitivePart(const Rec& p) { return divideContent(p, contentOf(p)); }

}  // namespace

MultiPoly gcdBivariate(const MultiPoly& a, const MultiPoly& b) {
    auto normalizeLc = [](const MultiPoly& p) {
        if (p.isZero()) return p;
        return p.scaled(p.leadingCoeff().inv());
    };
    if (a.isZero()) return normalizeLc(b);
    if (b.isZero()) return normalizeLc(a);
    Rec A = a.toRecursive(), B = b.toRecursive();
    Inner ca = contentOf(A), cb = contentOf(B);
    Inner c = gcdPoly(ca, cb);
    A = divideContent(A, ca);
    B = divideContent(B, cb);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (B.degree() > 0) {
        auto [q, r, e] = A.pseudoDivmod(B);
        (void)q;
        (void)e;
        if (r.isZero()) break;
        r = primitivePart(r);
        A = std::move(B);
        B = std::move(r);
    }
    Rec pp;
    if (B.degree() > 0)
        pp = B;  // pseudo-remainder vanished: B divides A
    else if (B.isZero())
        pp = A;
    else
        pp = Rec(Inner(AlgNumber(1)));
    Rec g = Rec(std::vector<Inner>{c}) * pp;
    return normalizeLc(MultiPoly::fromRecursive(g, a.vars()));
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DomainError("rational function with zero denominator");
    if (num_.isZero()) {
        den_ = MultiPoly::constant(AlgNumber(1), den_.vars());
        return;
    }
    MultiPoly g = gcdBivariate(num_, den_);
    if (!g.isConstant()) {
        num_ = *num_.tryDivide(g);
        den_ = *den_.tryDivide(g);
    }
    AlgNumber lc = den_.leadingCoeff();
    if (!lc.isOne()) {
        AlgNumber inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(AlgNumber(1), num_.vars())) {}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero()) throw DomainError("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return (num_ * o.den_ - o.num_ * den_).isZero();
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
    return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                            den_ * den_);
}

std::string RationalFunction::str() const {
    if (den_.isConstant() && den_.constantValue().isOne()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// --- bivariate factorization ---------------------------------------------

namespace {

using QInner = UPoly<Rational>;
using QRec = UPoly<QInner>;  // t-polynomials over Q[s]

QRec lowerRec(const Rec& p) {
    std::vector<QInner> rows;
    for (const auto& row : p.coeffs()) rows.push_back(lowerPoly(row));
    return QRec(std::move(rows));
}

Rec liftRec(const QRec& p) {
    std::vector<Inner> rows;
    for (const auto& row : p.coeffs()) rows.push_back(liftPoly(row));
    return Rec(std::move(rows));
}

QRec truncInner(const QRec& p, long bound) {
    std::vector<QInner> rows;
    for (const auto& row : p.coeffs()) {
        std::vector<Rational> c(row.coeffs().begin(),
                                row.coeffs().begin() +
                                    std::min<long>(static_cast<long>(row.coeffs().size()), bound));
        rows.emplace_back(std::move(c));
    }
    return QRec(std::move(rows));
}

long degS(const QRec& p) {
    long d = -1;
    for (const auto& row : p.coeffs()) d = std::max(d, row.degree());
    return d;
}

}  // namespace

bool isSquarefreeBivariate(const MultiPoly& p) {
    if (p.isZero()) return false;
    if (p.isConstant()) return true;
    MultiPoly g1 = gcdBivariate(p, p.derivative(p.vars()[1]));
    MultiPoly g2 = gcdBivariate(p, p.derivative(p.vars()[0]));
    return gcdBivariate(g1, g2).isConstant();
}

BivariateFactors factorBivariate(const MultiPoly& p) {
    if (p.isZero()) throw DomainError("factorization of zero polynomial");
    if (p.coefficientField())
        throw DomainError("bivariate factorization supports rational coefficients only");
    BivariateFactors out;
    out.unit = AlgNumber(1);
    if (p.isConstant()) {
        out.unit = p.constantValue();
        return out;
    }

    auto addFactor = [&](const MultiPoly& f, long mult) {
        MultiPoly n = f.scaled(f.leadingCoeff().inv());
        for (auto& [g, m] : out.factors) {
            if (g == n) {
                m += mult;
                return;
            }
        }
        out.factors.emplace_back(n, mult);
    };

    // peel off the univariate-in-s content
    Rec rec = p.toRecursive();
    Inner cont = contentOf(rec);
    if (cont.degree() > 0) {
        for (const auto& [h, m] : factorOverQ(lowerPoly(cont)).factors) {
            // univariate factor in s as a MultiPoly
            MultiPoly s = MultiPoly::variable(p.vars()[0], p.vars());
            MultiPoly acc(p.vars());
            for (std::size_t i = 0; i < h.coeffs().size(); ++i)
                acc = acc + s.pow(static_cast<long>(i))
                              .scaled(AlgNumber(h.coeffs()[i]));
            addFactor(acc, m);
        }
    }
    Rec pp = divideContent(rec, cont);
    if (pp.degree() == 0) {
        // constant after content removal; fold into unit below
    } else {
        MultiPoly ppM = MultiPoly::fromRecursive(pp, p.vars());
        bool swapped = false;
        if (pp.lc().degree() > 0) {
            MultiPoly sw = ppM.swappedVars();
            Rec swr = sw.toRecursive();
            Inner swCont = contentOf(swr);
            if (swCont.degree() == 0 && swr.lc().degree() == 0) {
                swapped = true;
                ppM = sw;
                pp = swr;
            } else {
                throw DomainError(
                    "unsupported denominator shape: non-constant leading coefficient in "
                    "both variables");
            }
        }
        // squarefree part w.r.t. the full polynomial
        MultiPoly g = gcdBivariate(ppM, ppM.derivative(ppM.vars()[1]));
        MultiPoly sf = g.isConstant() ? ppM : *ppM.tryDivide(g);

        // monic in t
        QRec G = lowerRec(sf.toRecursive());
        Rational lcQ = G.lc().coeff(0);
        {
            std::vector<QInner> rows;
            for (const auto& row : G.coeffs()) rows.push_back(row.scaled(lcQ.inv()));
            G = QRec(std::move(rows));
        }

        // choose an evaluation point keeping G(a,t) squarefree
        long shift = 0;
        UPoly<Rational> p0;
        for (long k = 0;; ++k) {
            long a = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
            std::vector<Rational> v;
            for (const auto& row : G.coeffs()) v.push_back(row.eval(Rational(a)));
            UPoly<Rational> cand(std::move(v));
            if (cand.degree() == G.degree() &&
                gcdPoly(cand, cand.derivative()).degree() == 0) {
                shift = a;
                p0 = cand;
                break;
            }
            if (k > 100) throw DomainError("no squarefree evaluation point found");
        }
        QRec Gs = G;
        if (shift != 0) {
            std::vector<QInner> rows;
            for (const auto& row : G.coeffs()) rows.push_back(row.shiftArg(Rational(shift)));
            Gs = QRec(std::move(rows));
        }

        auto baseFactors = factorOverQ(p0);
        std::vector<UPoly<Rational>> gi;
        for (const auto& [f, m] : baseFactors.factors) {
            if (m != 1) throw DomainError("internal: squarefree image not squarefree");
            gi.push_back(f);
        }

        std::vector<MultiPoly> irreducibles;
        if (gi.size() == 1) {
            irreducibles.push_back(sf);
        } else {
            long B = degS(Gs) + 1;
            // Bezout data: Hinv[i] = (prod_{l != i} g_l)^{-1} mod g_i
            std::vector<UPoly<Rational>> Hinv(gi.size());
            for (std::size_t i = 0; i < gi.size(); ++i) {
                UPoly<Rational> h(1);
                for (std::size_t l = 0; l < gi.size(); ++l)
                    if (l != i) h = (h * gi[l]) % gi[i];
                UPoly<Rational> g, s, t;
                extendedGcd(h, gi[i], g, s, t);
                if (g.degree() != 0) throw DomainError("internal: non-coprime lift factors");
                Hinv[i] = s.scaled(g.lc().inv()) % gi[i];
            }
            std::vector<QRec> lifts;
            for (const auto& f : gi) {
                std::vector<QInner> rows;
                for (const auto& c : f.coeffs()) rows.emplace_back(QInner(c));
                lifts.emplace_back(std::move(rows));
            }
            for (long j = 1; j < B; ++j) {
                QRec prod(QInner(Rational(1)));
                for (const auto& f : lifts) prod = truncInner(prod * f, j + 1);
                QRec E = Gs - prod;
                // coefficient of s^j, a polynomial in t
                std::vector<Rational> ej;
                for (const auto& row : E.coeffs()) ej.push_back(row.coeff(static_cast<std::size_t>(j)));
                UPoly<Rational> Ej(std::move(ej));
                if (Ej.isZero()) continue;
                for (std::size_t i = 0; i < gi.size(); ++i) {
                    UPoly<Rational> delta = (Ej % gi[i]) * Hinv[i] % gi[i];
                    if (delta.isZero()) continue;
                    // lifts[i] += s^j * delta
                    std::vector<QInner> rows(lifts[i].coeffs());
                    if (rows.size() < delta.coeffs().size())
                        rows.resize(delta.coeffs().size(), QInner());
                    for (std::size_t d = 0; d < delta.coeffs().size(); ++d)
                        rows[d] = rows[d] + QInner::monomial(delta.coeffs()[d],
                                                             static_cast<std::size_t>(j));
                    lifts[i] = QRec(std::move(rows));
                }
            }
            // subset recombination against the unshifted squarefree part
            std::vector<bool> used(lifts.size(), false);
            std::size_t nLeft = lifts.size();
            MultiPoly remPoly = sf;
            std::vector<AlgNumber> unshift = {AlgNumber(Rational(-shift)), AlgNumber(0)};
            for (std::size_t sz = 1; sz <= lifts.size() && nLeft > 0; ++sz) {
                std::vector<std::size_t> avail;
                for (std::size_t i = 0; i < lifts.size(); ++i)
                    if (!used[i]) avail.push_back(i);
                if (sz > avail.size()) break;
                std::vector<bool> mask(avail.size(), false);
                std::fill(mask.begin(), mask.begin() + static_cast<long>(sz), true);
                bool found = false;
                do {
                    QRec cand(QInner(Rational(1)));
                    for (std::size_t i = 0; i < avail.size(); ++i)
                        if (mask[i]) cand = truncInner(cand * lifts[avail[i]], B);
                    MultiPoly candM =
                        MultiPoly::fromRecursive(liftRec(cand), ppM.vars()).shifted(unshift);
                    auto q = remPoly.tryDivide(candM);
                    if (q) {
                        irreducibles.push_back(candM);
                        remPoly = *q;
                        for (std::size_t i = 0; i < avail.size(); ++i)
                            if (mask[i]) {
                                used[avail[i]] = true;
                                --nLeft;
                            }
                        found = true;
                        break;
                    }
                } while (std::prev_permutation(mask.begin(), mask.end()));
                if (found) --sz;
            }
            if (!remPoly.isConstant()) irreducibles.push_back(remPoly);
        }

        // multiplicities against the primitive part
        for (const auto& irrRaw : irreducibles) {
            MultiPoly irr = swapped ? irrRaw.swappedVars() : irrRaw;
            MultiPoly target = swapped ? ppM.swappedVars() : ppM;
            long m = 0;
            MultiPoly cur = target;
            while (true) {
                auto q = cur.tryDivide(irr);
                if (!q) break;
                cur = *q;
                ++m;
            }
            addFactor(irr, m);
        }
    }

    // unit = p / prod(factors^mult)
    MultiPoly prod = MultiPoly::constant(AlgNumber(1), p.vars());
    for (const auto& [f, m] : out.factors) prod = prod * f.pow(m);
    auto u = p.tryDivide(prod);
    if (!u || !u->isConstant())
        throw DomainError("internal: bivariate factorization incomplete for " + p.str());
    out.unit = u->constantValue();
    return out;
}

}  // namespace parshin
