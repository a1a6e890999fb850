#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "residue/hensel.hpp"
#include "residue/puiseux.hpp"
#include "residue/tower.hpp"

using namespace parshin;

namespace {

LaurentSeries geom() {  // 1/(1-u)
    return (LaurentSeries::constant(AlgNumber(1)) - LaurentSeries::var()).inv(32);
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    LaurentSeries one = LaurentSeries::constant(AlgNumber(1));
    LaurentSeries u = LaurentSeries::var();
    CHECK(((one + u) * (one - u)) == (one - u * u));
    CHECK((u.inv() * u) == one);
    LaurentSeries g = geom();
    for (long n = 0; n < 30; ++n) CHECK(g.coeff(n).isOne());
    CHECK((g * (one - u)).coeff(0).isOne());
    CHECK((g * (one - u)).coeff(5).isZero());
    // derivative of u^{-1} is -u^{-2}
    CHECK(u.inv().derivative().coeff(-2) == AlgNumber(-1));
}

TEST_CASE("precision tracking") {
    LaurentSeries a(0, {AlgNumber(1), AlgNumber(2)}, 5);   // known to O(u^5)
    LaurentSeries b(1, {AlgNumber(3)}, 3);                 // known to O(u^3)
    CHECK((a + b).knowEnd() == 3);
    CHECK((a * b).knowEnd() == 3);  // min(5+1, 3+0)
    CHECK_THROWS_AS(a.coeff(5), PrecisionLoss);
    CHECK_THROWS_AS(LaurentSeries::zeroTo(4).inv(), PrecisionLoss);
    // a zero-to-precision series times anything stays zero to a sound bound
    LaurentSeries z = LaurentSeries::zeroTo(6) * b;
    CHECK(z.isZeroToPrecision());
    CHECK(z.valuationLowerBound() == 7);
    // exact monomials invert exactly
    CHECK(LaurentSeries::monomial(AlgNumber(2), 3).inv().knowEnd() >= LaurentSeries::kExact);
}

TEST_CASE("tower arithmetic") {
    TowerSeries g = TowerSeries::gVar();
    TowerSeries u = TowerSeries::fromLaurent(LaurentSeries::var());
    TowerSeries p = u + g;
    CHECK((p * p - u * u - (u * g).scaled(AlgNumber(2)) - g * g).isZeroToPrecision());
    CHECK((g * g.inv()).coeffAt(0, 0).isOne());
    CHECK(p.derivG().coeffAt(0, 0).isOne());
    CHECK(p.derivU().coeffAt(0, 0).isOne());
    CHECK_THROWS_AS(TowerSeries::zeroTo(3).coeffG(4), PrecisionLoss);
}

TEST_CASE("puiseux back-substitution vanishes on all fixtures") {
    PrecisionBudget budget;
    for (const char* text : {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3",
                             "s*t", "t^2-s^5", "(t-s^2)*(t+s^2+s^3)"}) {
        MultiPoly f = parseExpression(text);
        auto branches = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), budget);
        CHECK(!branches.empty());
        for (const auto& b : branches) {
            LaurentSeries r = evalAtSeries(f, b.S, b.T);
            CHECK(r.isZeroToPrecision());
            CHECK(r.valuationLowerBound() >= budget.innerTerms);
        }
    }
}

TEST_CASE("branch counts and invariants") {
    PrecisionBudget budget;
    auto at0 = [&](const char* text) {
        return newtonPuiseux(parseExpression(text), AlgNumber(0), AlgNumber(0), budget);
    };
    auto node = at0("s^2*(s+1)-t^2");
    REQUIRE(node.size() == 2);
    CHECK(node[0].e == 1);
    CHECK(node[0].conjugacyClassSize == 1);
    auto cusp = at0("t^2-s^3");
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].e == 2);
    auto tac = at0("t^2-s^4");
    REQUIRE(tac.size() == 2);
    auto inode = at0("s^2+t^2-s^3");
    REQUIRE(inode.size() == 1);
    CHECK(inode[0].conjugacyClassSize == 2);
    REQUIRE(inode[0].residueField != nullptr);
    CHECK(inode[0].residueField->degree() == 2);
    // deterministic ordering is stable under escalation
    auto nodeHi = newtonPuiseux(parseExpression("s^2*(s+1)-t^2"), AlgNumber(0), AlgNumber(0),
                                budget.escalated());
    CHECK(nodeHi[0].T.coeff(1) == node[0].T.coeff(1));
    CHECK(nodeHi[1].T.coeff(1) == node[1].T.coeff(1));
}

TEST_CASE("branches at a smooth non-origin point") {
    PrecisionBudget budget;
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    auto branches = newtonPuiseux(f, AlgNumber(-1), AlgNumber(0), budget);
    REQUIRE(branches.size() == 1);
    LaurentSeries r = evalAtSeries(f.shifted({AlgNumber(-1), AlgNumber(0)}),
                                   branches[0].S, branches[0].T);
    CHECK(r.isZeroToPrecision());
}

TEST_CASE("hensel deformation satisfies f(S,T) = g") {
    PrecisionBudget budget;
    for (const char* text : {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3", "s*t"}) {
        MultiPoly f = parseExpression(text);
        auto branches = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), budget);
        for (const auto& b : branches) {
            HenselPair hp = henselDeform(f, b, budget);
            TowerSeries err = evalAtTower(f, hp.S, hp.T) - TowerSeries::gVar(budget.outerTerms);
            CHECK(err.isZeroToPrecision());
            // the undeformed coordinate matches the branch parametrization
            const TowerSeries& fixed = hp.deformedT ? hp.S : hp.T;
            const LaurentSeries& param = hp.deformedT ? b.S : b.T;
            CHECK((fixed.coeffG(0) - param).isZeroToPrecision());
        }
    }
}

TEST_CASE("precision budget escalation") {
    PrecisionBudget b;
    PrecisionBudget e = b.escalated();
    CHECK(e.innerTerms == b.innerTerms * b.escalationFactor);
    CHECK(e.outerTerms == b.outerTerms * b.escalationFactor);
    CHECK(e.maxEscalations == b.maxEscalations);
}
