#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "residue/analysis.hpp"

using namespace parshin;

namespace {

const PrecisionBudget kBudget;

SingularityReport reportAtOrigin(const char* text) {
    return analyzeSingularity(parseExpression(text), AlgNumber(0), AlgNumber(0), kBudget);
}

}  // namespace

TEST_CASE("singular point location") {
    auto origin = [](const std::vector<SingularPoint>& pts) {
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].s.isZero());
        CHECK(pts[0].t.isZero());
        CHECK(pts[0].field == nullptr);
    };
    origin(singularPoints(parseExpression("s^2*(s+1)-t^2")));
    origin(singularPoints(parseExpression("t^2-s^3")));
    origin(singularPoints(parseExpression("t^2-s^4")));
    origin(singularPoints(parseExpression("s^2+t^2-s^3")));
    CHECK(singularPoints(parseExpression("s^2+t^2-1")).empty());
    CHECK(singularPoints(parseExpression("t-s^2")).empty());
    // a reducible arrangement: three lines, three nodes
    auto tri = singularPoints(parseExpression("s*t*(s+t-1)"));
    CHECK(tri.size() == 3);
    // non-squarefree input is rejected
    CHECK_THROWS_AS(singularPoints(parseExpression("s^2*t")), DomainError);
}

TEST_CASE("vDim table") {
    auto check = [](const char* text, long vd) {
        SingularityReport rep = reportAtOrigin(text);
        CHECK(rep.vDim == vd);
        CHECK(rep.unibranch == (vd == 0));
    };
    check("s^2*(s+1)-t^2", 1);
    check("t^2-s^3", 0);
    check("s^2+t^2-s^3", 1);  // one conjugacy class of size [Q(i):Q] = 2
    check("t^2-s^4", 1);
}

TEST_CASE("membership bounds on the worked fixtures") {
    MultiPoly cusp = parseExpression("t^2-s^3");
    SingularityReport repc = reportAtOrigin("t^2-s^3");
    GeneralizedFraction onec(MultiPoly::constant(AlgNumber(1)), cusp, 1);
    CHECK(membershipBound(onec, Chain{cusp, AlgNumber(0), AlgNumber(0), repc.branches[0]},
                          kBudget) == 1);
    MultiPoly node = parseExpression("s^2*(s+1)-t^2");
    SingularityReport repn = reportAtOrigin("s^2*(s+1)-t^2");
    GeneralizedFraction onen(MultiPoly::constant(AlgNumber(1)), node, 1);
    CHECK(membershipBound(onen, Chain{node, AlgNumber(0), AlgNumber(0), repn.branches[0]},
                          kBudget) == 0);
}

TEST_CASE("membership dichotomy: multibranch classes fail") {
    for (const char* text : {"s^2*(s+1)-t^2", "s^2+t^2-s^3"}) {
        MultiPoly f = parseExpression(text);
        SingularityReport rep = reportAtOrigin(text);
        GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
        MembershipReport m = testMembership(cls, rep, kBudget);
        CHECK_FALSE(m.inL);
    }
}

TEST_CASE("membership dichotomy: 30 random cusp classes all pass") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<long> cDist(-4, 4);
    std::uniform_int_distribution<int> eDist(0, 3);
    MultiPoly f = parseExpression("t^2-s^3");
    SingularityReport rep = reportAtOrigin("t^2-s^3");
    for (int k = 0; k < 30; ++k) {
        MultiPoly p = MultiPoly::constant(AlgNumber(0));
        for (int terms = 0; terms < 3; ++terms) {
            MultiPoly mono = MultiPoly::constant(AlgNumber(cDist(rng)));
            mono = mono * parseExpression("s").pow(eDist(rng));
            mono = mono * parseExpression("t").pow(eDist(rng));
            p = p + mono;
        }
        if (p.isZero()) p = MultiPoly::constant(AlgNumber(1));
        long m = 1 + (k % 2);
        GeneralizedFraction cls(p, f, m);
        MembershipReport mr = testMembership(cls, rep, kBudget);
        CHECK(mr.inL);
    }
}

TEST_CASE("membership is closed under addition") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> cDist(-4, 4);
    std::uniform_int_distribution<int> eDist(0, 2);
    MultiPoly f = parseExpression("t^2-s^3");
    SingularityReport rep = reportAtOrigin("t^2-s^3");
    for (int k = 0; k < 5; ++k) {
        auto randomPoly = [&] {
            MultiPoly p = MultiPoly::constant(AlgNumber(cDist(rng)));
            p = p + parseExpression("s").pow(eDist(rng)).scaled(AlgNumber(cDist(rng)));
            p = p + parseExpression("t").pow(eDist(rng)).scaled(AlgNumber(cDist(rng)));
            return p;
        };
        MultiPoly a = randomPoly(), b = randomPoly();
        GeneralizedFraction ca(a, f, 1), cb(b, f, 1), cab(a + b, f, 1);
        bool inA = testMembership(ca, rep, kBudget).inL;
        bool inB = testMembership(cb, rep, kBudget).inL;
        bool inAB = testMembership(cab, rep, kBudget).inL;
        if (inA && inB) CHECK(inAB);
    }
}

TEST_CASE("classes reduced to zero are in L") {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    SingularityReport rep = reportAtOrigin("s^2*(s+1)-t^2");
    GeneralizedFraction cls(f * parseExpression("s+2"), f, 1);
    CHECK(cls.isZeroClass());
    CHECK(testMembership(cls, rep, kBudget).inL);
}

TEST_CASE("fundamental class vanishes on all fixtures") {
    for (const char* text : {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3"}) {
        MultiPoly f = parseExpression(text);
        SingularityReport rep = reportAtOrigin(text);
        FundamentalClassReport fc = fundamentalClassCheck(f, rep, kBudget);
        CHECK(fc.allZero);
        CHECK(fc.dsComponent.inL);
        CHECK(fc.dtComponent.inL);
    }
}

TEST_CASE("fundamental class components pass membership individually") {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    SingularityReport rep = reportAtOrigin("s^2*(s+1)-t^2");
    // [ds^df/f] = [f_t ds^dt/f]
    GeneralizedFraction dsClass(f.derivative("t"), f, 1);
    CHECK(testMembership(dsClass, rep, kBudget).inL);
}
