#include "residue/residues.hpp"

#include <sstream>

#include "residue/errors.hpp"
#include "residue/zfactor.hpp"

namespace parshin {

namespace {

// orientation: +1 calibrated so that ds∧dt/(st) along the {t=0}-chain at the
// origin has residue +1
constexpr long kOrientation = 1;

TowerSeries jacobian(const HenselPair& hp) {
    return hp.S.derivU() * hp.T.derivG() - hp.S.derivG() * hp.T.derivU();
}

ResidueValue makeValue(const AlgNumber& v, const Chain& chain) {
    FieldPtr base = commonField(chain.pointS.ext(), chain.pointT.ext());
    return ResidueValue{v, traceToBase(v, base)};
}

ResidueValue residueForm2(const DiffForm2& w, const Chain& chain,
                          const PrecisionBudget& budget, const HenselPair& hp) {
    if (w.coeff.isZero()) return makeValue(AlgNumber(0), chain);
    // split off the chain curve's power: den = f^m h with h not divisible by
    // f, so den(S,T) = g^m h(S,T) with h invertible along the branch
    MultiPoly den = w.coeff.den();
    long m = 0;
    while (true) {
        auto q = den.tryDivide(chain.curve);
        if (!q) break;
        den = *q;
        ++m;
    }
    RationalFunction h(w.coeff.num().shifted({chain.pointS, chain.pointT}),
                       den.shifted({chain.pointS, chain.pointT}));
    TowerSeries c = towerSubstitute(h, hp.S, hp.T, budget) * jacobian(hp);
    AlgNumber v = kOrientation * c.coeffAt(-1, m - 1);
    return makeValue(v, chain);
}

ResidueValue residueFraction(const GeneralizedFraction& cls, const Chain& chain,
                             const PrecisionBudget& budget, const HenselPair& hp) {
    if (cls.isZeroClass()) return makeValue(AlgNumber(0), chain);
    MultiPoly pShift = cls.p().shifted({chain.pointS, chain.pointT});
    TowerSeries c = evalAtTower(pShift, hp.S, hp.T) * jacobian(hp);
    AlgNumber v = kOrientation * c.coeffAt(-1, cls.m() - 1);
    return makeValue(v, chain);
}

}  // namespace

AlgNumber traceToBase(const AlgNumber& v, const FieldPtr& base) {
    if (base == nullptr) return v.isRational() ? v : AlgNumber(v.traceToQ());
    // nested extensions are unsupported, so k(x̃) = k(x) here
    return v;
}

ResidueValue withEscalation(const PrecisionBudget& budget,
                            const std::function<ResidueValue(const PrecisionBudget&)>& fn) {
    PrecisionBudget b = budget;
    for (long k = 0;; ++k) {
        try {
            return fn(b);
        } catch (const PrecisionLoss&) {
            if (k >= budget.maxEscalations)
                throw PrecisionExhausted("precision budget exhausted after " +
                                         std::to_string(budget.maxEscalations) +
                                         " escalations");
            b = b.escalated();
        }
    }
}

ResidueValue parshinResidue(const DiffForm2& w, const Chain& chain,
                            const PrecisionBudget& budget) {
    return withEscalation(budget, [&](const PrecisionBudget& b) {
        HenselPair hp = henselDeform(chain.curve, chain.branch, b);
        return residueForm2(w, chain, b, hp);
    });
}

ResidueValue parshinResidue(const GeneralizedFraction& cls, const Chain& chain,
                            const PrecisionBudget& budget) {
    return withEscalation(budget, [&](const PrecisionBudget& b) {
        HenselPair hp = henselDeform(chain.curve, chain.branch, b);
        return residueFraction(cls, chain, b, hp);
    });
}

bool residueIndependenceCheck(const DiffForm2& w, const Chain& chain,
                              const PrecisionBudget& budget) {
    ResidueValue a = withEscalation(budget, [&](const PrecisionBudget& b) {
        return residueForm2(w, chain, b, henselDeformForced(chain.curve, chain.branch, b, true));
    });
    ResidueValue bv = withEscalation(budget, [&](const PrecisionBudget& b) {
        return residueForm2(w, chain, b, henselDeformForced(chain.curve, chain.branch, b, false));
    });
    return a.value == bv.value;
}

GlobalResidueReport globalResidueCheckP1(const UPoly<AlgNumber>& num,
                                         const UPoly<AlgNumber>& den) {
    if (den.isZero()) throw DomainError("zero denominator");
    GlobalResidueReport rep;
    rep.total = AlgNumber(0);
    long window = 2 * (std::max<long>(num.degree(), 0) + den.degree()) + 16;

    auto residueAt = [&](const AlgNumber& s0, const FieldPtr& K) {
        LaurentSeries x = LaurentSeries::constant(s0) + LaurentSeries::var();
        LaurentSeries n = evalAtSeries(num, x).truncated(window);
        LaurentSeries d = evalAtSeries(den, x).truncated(window);
        LaurentSeries r = n * d.inv(window);
        AlgNumber res = r.coeff(-1);
        return K == nullptr ? res : AlgNumber(res.traceToQ());
    };

    auto fac = factorOverQ(lowerPoly(den));
    for (const auto& [q, mult] : fac.factors) {
        std::ostringstream loc;
        if (q.degree() == 1) {
            AlgNumber s0(-q.coeffs()[0]);
            loc << "s=" << s0.str();
            rep.poles.push_back(PoleResidue{loc.str(), residueAt(s0, nullptr)});
        } else {
            FieldPtr K = FieldExt::create(q);
            loc << "s=root-of(" << K->minPolyText() << ")";
            rep.poles.push_back(
                PoleResidue{loc.str(), residueAt(AlgNumber::generator(K), K)});
        }
        rep.total = rep.total + rep.poles.back().traced;
    }

    // pole at infinity: s = 1/v, ds = -dv/v^2
    long dn = std::max<long>(num.degree(), 0), dd = den.degree();
    LaurentSeries nRev = evalAtSeries(num.reversed(), LaurentSeries::var()).truncated(window);
    LaurentSeries dRev = evalAtSeries(den.reversed(), LaurentSeries::var()).truncated(window);
    LaurentSeries atInf =
        (nRev * dRev.inv(window)).shifted(dd - dn - 2).scaled(AlgNumber(-1));
    AlgNumber resInf = num.isZero() ? AlgNumber(0) : atInf.coeff(-1);
    rep.poles.push_back(PoleResidue{"infinity", resInf});
    rep.total = rep.total + resInf;
    return rep;
}

LocalSumReport localResidueTheoremCheck(const DiffForm2& w, const AlgNumber& ps,
                                        const AlgNumber& pt, const PrecisionBudget& budget) {
    LocalSumReport rep;
    rep.total = AlgNumber(0);
    if (w.coeff.isZero()) return rep;
    BivariateFactors bf = factorBivariate(w.coeff.den());
    for (const auto& [C, mult] : bf.factors) {
        if (!C.eval({ps, pt}).isZero()) continue;
        auto branches = newtonPuiseux(C, ps, pt, budget);
        for (std::size_t bi = 0; bi < branches.size(); ++bi) {
            Chain chain{C, ps, pt, branches[bi]};
            ResidueValue rv = parshinResidue(w, chain, budget);
            rep.terms.push_back(ChainResidue{C.str(), bi, rv});
            rep.total = rep.total + rv.tracedValue;
        }
    }
    return rep;
}

}  // namespace parshin
