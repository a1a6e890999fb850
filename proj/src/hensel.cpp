#include "residue/hensel.hpp"

#include "residue/errors.hpp"

namespace parshin {

namespace {

// Newton correction of the second coordinate: solve f0(S, T) = g with
// T(u, 0) = T0, S held fixed.
TowerSeries solveForT(const MultiPoly& f0, const LaurentSeries& S0,
                      const LaurentSeries& T0, const PrecisionBudget& budget) {
    long Q = budget.outerTerms;
    long W = budget.innerTerms;
    MultiPoly ft = f0.derivative(f0.vars()[1]);
    TowerSeries S = TowerSeries::fromLaurent(S0, Q);
    TowerSeries T = TowerSeries::fromLaurent(T0, Q);
    TowerSeries g = TowerSeries::gVar(Q);
    for (int iter = 0; iter < 40; ++iter) {
        TowerSeries err = evalAtTower(f0, S, T) - g;
        if (err.isZeroToPrecision()) return T;
        TowerSeries den = evalAtTower(ft, S, T);
        T = (T - err * den.inv(W)).truncatedG(Q);
    }
    throw PrecisionLoss("Hensel correction failed to converge in the g-window");
}

}  // namespace

HenselPair henselDeformForced(const MultiPoly& f, const PuiseuxBranch& branch,
                              const PrecisionBudget& budget, bool deformT) {
    MultiPoly f0 = f.shifted({branch.pointS, branch.pointT});
    const std::string& var = deformT ? f0.vars()[1] : f0.vars()[0];
    LaurentSeries partial = evalAtSeries(f0.derivative(var), branch.S, branch.T);
    if (partial.isZeroToPrecision())
        throw PrecisionLoss("requested partial derivative vanishes to precision");
    HenselPair hp;
    hp.deformedT = deformT;
    if (deformT) {
        hp.S = TowerSeries::fromLaurent(branch.S, budget.outerTerms);
        hp.T = solveForT(f0, branch.S, branch.T, budget);
    } else {
        hp.T = TowerSeries::fromLaurent(branch.T, budget.outerTerms);
        hp.S = solveForT(f0.swappedVars(), branch.T, branch.S, budget);
    }
    return hp;
}

HenselPair henselDeform(const MultiPoly& f, const PuiseuxBranch& branch,
                        const PrecisionBudget& budget) {
    MultiPoly f0 = f.shifted({branch.pointS, branch.pointT});
    LaurentSeries ftAlong =
        evalAtSeries(f0.derivative(f0.vars()[1]), branch.S, branch.T);
    if (!ftAlong.isZeroToPrecision())
        return henselDeformForced(f, branch, budget, true);
    LaurentSeries fsAlong =
        evalAtSeries(f0.derivative(f0.vars()[0]), branch.S, branch.T);
    if (!fsAlong.isZeroToPrecision())
        return henselDeformForced(f, branch, budget, false);
    if (ftAlong.isExactZero() && fsAlong.isExactZero())
        throw DomainError("both partials vanish along the branch (non-reduced curve)");
    throw PrecisionLoss("cannot certify a nonzero partial derivative along the branch");
}

TowerSeries towerSubstitute(const RationalFunction& r, const TowerSeries& S,
                            const TowerSeries& T, const PrecisionBudget& budget) {
    TowerSeries num = evalAtTower(r.num(), S, T);
    if (r.den().isConstant())
        return num.scaled(r.den().constantValue().inv());
    TowerSeries den = evalAtTower(r.den(), S, T);
    return num * den.inv(budget.innerTerms);
}

}  // namespace parshin
