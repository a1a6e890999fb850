// Acceptance gate: one pass/fail line per criterion, exit status = number of
// failed criteria. Everything is exact; there are no tolerances.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "residue/analysis.hpp"
#include "residue/zfactor.hpp"

using namespace parshin;

namespace {

const PrecisionBudget kBudget;
int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "criterion " << n << " [" << name << "]: " << (ok ? "pass" : "fail")
              << note << "\n";
    if (!ok) ++failures;
}

SingularityReport reportAtOrigin(const MultiPoly& f) {
    return analyzeSingularity(f, AlgNumber(0), AlgNumber(0), kBudget);
}

Chain chainAtOrigin(const MultiPoly& f, const SingularityReport& rep, std::size_t i) {
    return Chain{f, AlgNumber(0), AlgNumber(0), rep.branches[i]};
}

// ---- criterion bodies ----------------------------------------------------

// Worked node example: frozen golden residues +1/2 and -1/2, membership
// verdict, fundamental-class battery.
bool nodeExample() {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    SingularityReport rep = reportAtOrigin(f);
    if (rep.branches.size() != 2) return false;
    GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
    AlgNumber r0 = parshinResidue(cls, chainAtOrigin(f, rep, 0), kBudget).value;
    AlgNumber r1 = parshinResidue(cls, chainAtOrigin(f, rep, 1), kBudget).value;
    if (r0.isZero() || !(r0 + r1).isZero()) return false;      // opposite nonzero
    if (r0 != AlgNumber(Rational(1, 2))) return false;         // frozen golden value
    if (r1 != AlgNumber(Rational(-1, 2))) return false;
    if (testMembership(cls, rep, kBudget).inL) return false;   // not in L(X,Y)
    FundamentalClassReport fc = fundamentalClassCheck(f, rep, kBudget);
    if (!fc.allZero) return false;
    GeneralizedFraction dsClass(f.derivative("t"), f, 1);      // [ds^df/f]
    return testMembership(dsClass, rep, kBudget).inL;
}

// One-dimensional residue unit suite: du/u, pure powers, linearity.
bool residue1dSuite() {
    if (residue1d(LaurentSeries::var().inv()) != AlgNumber(1)) return false;
    for (long i = -5; i <= 5; ++i) {
        if (i == -1) continue;
        if (!residue1d(LaurentSeries::monomial(AlgNumber(1), i)).isZero()) return false;
    }
    std::mt19937 rng(71);
    std::uniform_int_distribution<long> lowDist(-4, 2), lenDist(1, 6), cDist(-7, 7);
    auto randomSeries = [&] {
        long low = lowDist(rng), len = lenDist(rng);
        std::vector<AlgNumber> c;
        for (long i = 0; i < len; ++i) c.push_back(AlgNumber(cDist(rng)));
        return LaurentSeries(low, std::move(c), low + len + 4);
    };
    for (int k = 0; k < 50; ++k) {
        LaurentSeries x = randomSeries(), y = randomSeries();
        AlgNumber a(cDist(rng)), b(cDist(rng));
        if (residue1d(x.scaled(a) + y.scaled(b)) !=
            a * residue1d(x) + b * residue1d(y))
            return false;
    }
    return true;
}

// Global residue theorem on P1 for 50 random forms, denominator degree <= 6,
// including denominators splitting only over quadratic extensions.
bool globalSuite() {
    std::mt19937 rng(73);
    using P = UPoly<Rational>;
    std::vector<P> pool = {
        P({Rational(0), Rational(1)}),
        P({Rational(-1), Rational(1)}),
        P({Rational(1), Rational(1)}),
        P({Rational(2), Rational(1)}),
        P({Rational(-2), Rational(0), Rational(1)}),
        P({Rational(-3), Rational(0), Rational(1)}),
        P({Rational(1), Rational(0), Rational(1)}),
        P({Rational(1), Rational(1), Rational(1)}),
    };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> countDist(1, 3);
    std::uniform_int_distribution<long> cDist(-5, 5);
    for (int k = 0; k < 50; ++k) {
        std::set<std::size_t> chosen;
        int count = countDist(rng);
        while (static_cast<int>(chosen.size()) < count) chosen.insert(pick(rng));
        P den(Rational(1));
        for (auto i : chosen) den = den * pool[i];
        std::vector<Rational> nc(static_cast<std::size_t>(den.degree()) + 1);
        for (auto& c : nc) c = Rational(cDist(rng));
        P num(std::move(nc));
        if (!globalResidueCheckP1(liftPoly(num), liftPoly(den)).total.isZero()) return false;
    }
    return true;
}

// Local residue theorem at the origin: fixture denominators plus 20 random
// products of distinct irreducibles through the origin.
bool localSuite() {
    auto check = [&](const MultiPoly& num, const MultiPoly& den) {
        DiffForm2 w{RationalFunction(num, den)};
        return localResidueTheoremCheck(w, AlgNumber(0), AlgNumber(0), kBudget)
            .total.isZero();
    };
    MultiPoly one = MultiPoly::constant(AlgNumber(1));
    for (const char* den : {"s*t", "s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4"})
        if (!check(one, parseExpression(den))) return false;
    std::mt19937 rng(79);
    std::vector<MultiPoly> pool = {
        parseExpression("s"),     parseExpression("t"),     parseExpression("t-s"),
        parseExpression("t+s"),   parseExpression("t-s^2"), parseExpression("s-t^2"),
        parseExpression("t-2*s"), parseExpression("t^2-s^3"),
        parseExpression("s^2*(s+1)-t^2"),
    };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> countDist(1, 3);
    std::uniform_int_distribution<long> cDist(-4, 4);
    for (int k = 0; k < 20; ++k) {
        std::set<std::size_t> chosen;
        int count = countDist(rng);
        while (static_cast<int>(chosen.size()) < count) chosen.insert(pick(rng));
        MultiPoly den = one;
        for (auto i : chosen) den = den * pool[i];
        MultiPoly num = MultiPoly::constant(AlgNumber(cDist(rng))) +
                        parseExpression("s").scaled(AlgNumber(cDist(rng))) +
                        parseExpression("t").scaled(AlgNumber(cDist(rng)));
        if (num.isZero()) num = one;
        if (!check(num, den)) return false;
    }
    return true;
}

// Independence of the coordinate normalization on every fixture chain where
// both deformations exist.
bool independenceSuite() {
    long cases = 0;
    for (const char* text :
         {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3", "t^2-s^5"}) {
        MultiPoly f = parseExpression(text);
        SingularityReport rep = reportAtOrigin(f);
        for (std::size_t i = 0; i < rep.branches.size(); ++i) {
            Chain chain = chainAtOrigin(f, rep, i);
            for (const char* num : {"1", "s+t+1"}) {
                DiffForm2 w{RationalFunction(parseExpression(num), f)};
                if (!residueIndependenceCheck(w, chain, kBudget)) return false;
                ++cases;
            }
        }
    }
    return cases >= 10;
}

// Unibranch dichotomy: 30 random cusp classes pass; the node and the Q(i)
// node fail on [ds^dt/f].
bool dichotomySuite() {
    MultiPoly cusp = parseExpression("t^2-s^3");
    SingularityReport repc = reportAtOrigin(cusp);
    if (repc.vDim != 0) return false;
    std::mt19937 rng(83);
    std::uniform_int_distribution<long> cDist(-4, 4);
    std::uniform_int_distribution<int> eDist(0, 3);
    for (int k = 0; k < 30; ++k) {
        MultiPoly p = MultiPoly::constant(AlgNumber(0));
        for (int terms = 0; terms < 3; ++terms) {
            MultiPoly mono = MultiPoly::constant(AlgNumber(cDist(rng)));
            mono = mono * parseExpression("s").pow(eDist(rng));
            mono = mono * parseExpression("t").pow(eDist(rng));
            p = p + mono;
        }
        if (p.isZero()) p = MultiPoly::constant(AlgNumber(1));
        GeneralizedFraction cls(p, cusp, 1 + (k % 2));
        if (!testMembership(cls, repc, kBudget).inL) return false;
    }
    for (const char* text : {"s^2*(s+1)-t^2", "s^2+t^2-s^3"}) {
        MultiPoly f = parseExpression(text);
        GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
        if (testMembership(cls, reportAtOrigin(f), kBudget).inL) return false;
    }
    return true;
}

// Structural invariants: precision-doubling stability of residues, Puiseux
// back-substitution, the Hensel defining identity, factor multiply-back.
bool structuralSuite() {
    const char* fixtures[] = {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3", "s*t"};
    PrecisionBudget doubled = kBudget.escalated();
    for (const char* text : fixtures) {
        MultiPoly f = parseExpression(text);
        auto branches = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), kBudget);
        for (const auto& b : branches) {
            if (!evalAtSeries(f, b.S, b.T).isZeroToPrecision()) return false;
            HenselPair hp = henselDeform(f, b, kBudget);
            TowerSeries err =
                evalAtTower(f, hp.S, hp.T) - TowerSeries::gVar(kBudget.outerTerms);
            if (!err.isZeroToPrecision()) return false;
        }
        // every residue is bit-identical when recomputed at doubled precision
        GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
        auto branchesHi = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), doubled);
        if (branchesHi.size() != branches.size()) return false;
        for (std::size_t i = 0; i < branches.size(); ++i) {
            AlgNumber lo = parshinResidue(cls, Chain{f, AlgNumber(0), AlgNumber(0), branches[i]},
                                          kBudget).value;
            AlgNumber hi = parshinResidue(cls, Chain{f, AlgNumber(0), AlgNumber(0), branchesHi[i]},
                                          doubled).value;
            if (lo != hi) return false;
        }
    }
    std::mt19937 rng(89);
    std::uniform_int_distribution<long> degDist(1, 6), cDist(-6, 6);
    for (int k = 0; k < 100; ++k) {
        long deg = degDist(rng);
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = Rational(cDist(rng));
        if (c.back().isZero()) c.back() = Rational(1);
        UPoly<Rational> p(std::move(c));
        QFactorization fac = factorOverQ(p);
        UPoly<Rational> prod{Rational(1)};
        prod = prod.scaled(fac.unit);
        for (const auto& [f, m] : fac.factors)
            for (long i = 0; i < m; ++i) prod = prod * f;
        if (prod != p) return false;
    }
    return true;
}

// vDim table: node 1, cusp 0, Q(i) node 1, tacnode 1.
bool vDimTable() {
    return reportAtOrigin(parseExpression("s^2*(s+1)-t^2")).vDim == 1 &&
           reportAtOrigin(parseExpression("t^2-s^3")).vDim == 0 &&
           reportAtOrigin(parseExpression("s^2+t^2-s^3")).vDim == 1 &&
           reportAtOrigin(parseExpression("t^2-s^4")).vDim == 1;
}

}  // namespace

int main() {
    criterion(1, "node example reproduction", nodeExample);
    criterion(2, "1d residue unit suite", residue1dSuite);
    criterion(3, "global residue theorem on P1", globalSuite);
    criterion(4, "local residue theorem", localSuite);
    criterion(5, "normalization independence", independenceSuite);
    criterion(6, "unibranch membership dichotomy", dichotomySuite);
    criterion(7, "structural invariants", structuralSuite);
    criterion(8, "vDim table", vDimTable);
    return failures;
}
