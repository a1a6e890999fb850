#include "residue/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "residue/errors.hpp"
#include "residue/zfactor.hpp"

namespace parshin {

namespace {

// evaluate the s-coefficients of a bivariate polynomial at s = s0, leaving a
// univariate polynomial in t
UPoly<AlgNumber> atS(const MultiPoly& f, const AlgNumber& s0) {
    auto rec = f.toRecursive();  // outer t, inner s
    std::vector<AlgNumber> c;
    c.reserve(rec.coeffs().size());
    for (const auto& inner : rec.coeffs()) c.push_back(inner.eval(s0));
    return UPoly<AlgNumber>(c);
}

// resultant with respect to t, as a univariate polynomial in s
UPoly<AlgNumber> resT(const MultiPoly& a, const MultiPoly& b) {
    auto ra = a.toRecursive();
    auto rb = b.toRecursive();
    if (ra.isZero() || rb.isZero()) return UPoly<AlgNumber>();
    if (ra.degree() == 0 && rb.degree() == 0) return UPoly<AlgNumber>::monomial(AlgNumber(1), 0);
    if (ra.degree() == 0) return ringPow(ra.coeffs()[0], rb.degree());
    if (rb.degree() == 0) return ringPow(rb.coeffs()[0], ra.degree());
    return resultant(ra, rb);
}

struct PointKey {
    std::string field, s, t;
    bool operator<(const PointKey& o) const {
        if (field != o.field) return field < o.field;
        if (s != o.s) return s < o.s;
        return t < o.t;
    }
};

// all t-values over a fixed s0 where every polynomial in polys vanishes
void collectPoints(const AlgNumber& s0, const FieldPtr& Ks,
                   const std::vector<UPoly<AlgNumber>>& polys,
                   std::map<PointKey, SingularPoint>& out) {
    UPoly<AlgNumber> g;
    bool allZero = true;
    for (const auto& p : polys) {
        if (p.isZero()) continue;
        allZero = false;
        g = g.isZero() ? p : gcdPoly(g, p);
    }
    if (allZero)
        throw DomainError("degenerate system while solving for singular points");
    if (g.degree() <= 0) return;
    for (const auto& [q, mult] : factorOverField(g, Ks)) {
        AlgNumber t0;
        FieldPtr K = Ks;
        if (q.degree() == 1) {
            t0 = -q.coeffs()[0];
        } else if (Ks == nullptr) {
            K = FieldExt::create(lowerPoly(q));
            t0 = AlgNumber::generator(K);
        } else {
            throw UnsupportedExtension(
                "singular point needs a nested extension: s satisfies " +
                Ks->minPolyText() + ", then t satisfies a degree-" +
                std::to_string(q.degree()) + " equation over it");
        }
        SingularPoint pt{s0, t0, K};
        PointKey key{K ? K->minPolyText() : "", pt.s.str(), pt.t.str()};
        out.emplace(key, pt);
    }
}

long floorRational(const Rational& r) {
    mpz_class num = r.num(), den = r.den(), q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q.get_si();
}

bool rationalLess(const Rational& a, const Rational& b) {
    return a.num() * b.den() < b.num() * a.den();
}

}  // namespace

std::vector<SingularPoint> singularPoints(const MultiPoly& f, long degreeCap) {
    if (f.totalDegree() > degreeCap)
        throw DomainError("curve degree exceeds the configured cap");
    if (!isSquarefreeBivariate(f))
        throw DomainError("curve is not squarefree");

    BivariateFactors bf = factorBivariate(f);
    std::map<PointKey, SingularPoint> found;

    auto sRoots = [&](const UPoly<AlgNumber>& R)
        -> std::vector<std::pair<AlgNumber, FieldPtr>> {
        std::vector<std::pair<AlgNumber, FieldPtr>> roots;
        if (R.degree() <= 0) return roots;
        for (const auto& [q, mult] : factorOverQ(lowerPoly(R)).factors) {
            if (q.degree() == 1) {
                roots.emplace_back(AlgNumber(-q.coeffs()[0]), nullptr);
            } else {
                FieldPtr K = FieldExt::create(q);
                roots.emplace_back(AlgNumber::generator(K), K);
            }
        }
        return roots;
    };

    // singular points of each irreducible component
    for (const auto& [C, mult] : bf.factors) {
        MultiPoly Cs = C.derivative("s"), Ct = C.derivative("t");
        if (C.degreeIn(1) == 0 || C.degreeIn(0) == 0) continue;  // lines: smooth
        UPoly<AlgNumber> R = resT(C, Ct);
        for (const auto& [s0, Ks] : sRoots(R))
            collectPoints(s0, Ks, {atS(C, s0), atS(Ct, s0), atS(Cs, s0)}, found);
    }
    // pairwise intersections of distinct components
    for (std::size_t i = 0; i < bf.factors.size(); ++i)
        for (std::size_t j = i + 1; j < bf.factors.size(); ++j) {
            const MultiPoly& A = bf.factors[i].first;
            const MultiPoly& B = bf.factors[j].first;
            UPoly<AlgNumber> R = resT(A, B);
            for (const auto& [s0, Ks] : sRoots(R))
                collectPoints(s0, Ks, {atS(A, s0), atS(B, s0)}, found);
        }

    std::vector<SingularPoint> out;
    for (auto& [k, p] : found) out.push_back(std::move(p));
    return out;
}

SingularityReport analyzeSingularity(const MultiPoly& f, const AlgNumber& ps,
                                     const AlgNumber& pt, const PrecisionBudget& budget) {
    SingularityReport rep;
    rep.ps = ps;
    rep.pt = pt;
    rep.branches = newtonPuiseux(f, ps, pt, budget);
    long total = 0;
    for (const auto& b : rep.branches) total += b.conjugacyClassSize;
    rep.vDim = total - 1;
    rep.unibranch = (rep.vDim == 0);
    return rep;
}

long membershipBound(const GeneralizedFraction& cls, const Chain& chain,
                     const PrecisionBudget& budget) {
    if (cls.isZeroClass()) return -1;
    HenselPair hp = henselDeform(chain.curve, chain.branch, budget);
    TowerSeries base =
        evalAtTower(cls.p().shifted({chain.pointS, chain.pointT}), hp.S, hp.T) *
        (hp.S.derivU() * hp.T.derivG() - hp.S.derivG() * hp.T.derivU());
    // worst-case drop in u-valuation per unit of g-order, from the deformed
    // coordinate: W' = min(0, min_a (val(X_a) - val(X_0))/a)
    const TowerSeries& def = hp.deformedT ? hp.T : hp.S;
    long val0 = def.coeffG(0).valuationLowerBound();
    Rational wp(0);
    for (long a = 1; a < std::min(def.gKnowEnd(), def.gLow() + static_cast<long>(def.coeffs().size())); ++a) {
        LaurentSeries ca = def.coeffG(a);
        if (ca.isZeroToPrecision() && ca.valuationLowerBound() >= val0) continue;
        Rational ratio = Rational(ca.valuationLowerBound() - val0) / Rational(a);
        if (rationalLess(ratio, wp)) wp = ratio;
    }
    long N = -(1L << 20);
    for (long k = 0; k < cls.m(); ++k) {
        long lowOrd = base.coeffG(cls.m() - 1 - k).valuationLowerBound();
        long cand = -1 - floorRational(Rational(k) * wp) - lowOrd;
        N = std::max(N, cand);
    }
    return N;
}

MembershipReport testMembership(const GeneralizedFraction& cls,
                                const SingularityReport& report,
                                const PrecisionBudget& budget) {
    MembershipReport rep;
    for (std::size_t bi = 0; bi < report.branches.size(); ++bi) {
        Chain chain{cls.f(), report.ps, report.pt, report.branches[bi]};
        long N = membershipBound(cls, chain, budget);
        rep.monomialBound = std::max(rep.monomialBound, N);
        if (N < 0) continue;
        long valS = chain.branch.S.valuationLowerBound();
        long valT = chain.branch.T.valuationLowerBound();
        for (long i = 0; i * valS <= N; ++i) {
            for (long j = 0; i * valS + j * valT <= N; ++j) {
                MultiPoly mono(cls.f().vars(),
                               {{{static_cast<int>(i), static_cast<int>(j)}, AlgNumber(1)}});
                GeneralizedFraction test(cls.p() * mono, cls.f(), cls.m());
                ResidueValue rv = parshinResidue(test, chain, budget);
                rep.entries.push_back(MonomialResidue{bi, i, j, rv});
                if (!rv.value.isZero()) rep.inL = false;
                if (valT >= LaurentSeries::kExact) break;
            }
            if (valS >= LaurentSeries::kExact) break;
        }
    }
    return rep;
}

FundamentalClassReport fundamentalClassCheck(const MultiPoly& f,
                                             const SingularityReport& report,
                                             const PrecisionBudget& budget) {
    FundamentalClassReport rep;
    // ds∧df = f_t ds∧dt ; dt∧df = -f_s ds∧dt
    GeneralizedFraction dsClass(f.derivative("t"), f, 1);
    GeneralizedFraction dtClass(-f.derivative("s"), f, 1);
    rep.dsComponent = testMembership(dsClass, report, budget);
    rep.dtComponent = testMembership(dtClass, report, budget);
    rep.allZero = rep.dsComponent.inL && rep.dtComponent.inL;
    return rep;
}

}  // namespace parshin
