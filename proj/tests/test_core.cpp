#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "residue/multipoly.hpp"
#include "residue/numberfield.hpp"
#include "residue/ratfunc.hpp"
#include "residue/zfactor.hpp"

using namespace parshin;

namespace {

UPoly<Rational> randomPoly(std::mt19937& rng, long maxDeg) {
    std::uniform_int_distribution<long> degDist(1, maxDeg);
    std::uniform_int_distribution<long> cDist(-6, 6);
    long deg = degDist(rng);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = Rational(cDist(rng));
    if (c.back().isZero()) c.back() = Rational(1);
    return UPoly<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic canonical forms") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK(Rational::fromString("-7/21").str() == "-1/3");
    CHECK(Rational(5, 7).inv().str() == "7/5");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(0).inv(), DomainError);
}

TEST_CASE("univariate division and gcd") {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        UPoly<Rational> a = randomPoly(rng, 6), b = randomPoly(rng, 4);
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        UPoly<Rational> g = gcdPoly(a, b);
        CHECK((a % g).isZero());
        CHECK((b % g).isZero());
    }
}

TEST_CASE("factorization over Q multiplies back (100 random)") {
    std::mt19937 rng(17);
    for (int k = 0; k < 100; ++k) {
        UPoly<Rational> p = randomPoly(rng, 6);
        QFactorization fac = factorOverQ(p);
        UPoly<Rational> prod(Rational(1));
        prod = prod.scaled(fac.unit);
        for (const auto& [f, m] : fac.factors) {
            CHECK(f.lc().isOne());
            CHECK(isIrreducibleOverQ(f));
            for (long i = 0; i < m; ++i) prod = prod * f;
        }
        CHECK(prod == p);
    }
}

TEST_CASE("resultant values and vanishing") {
    using P = UPoly<Rational>;
    P x = P::x();
    // res(x^2-2, x^2-3) = prod over roots ±sqrt(2) of (root^2 - 3) = 1
    CHECK(resultant(x * x - P(2), x * x - P(3)) == Rational(1));
    // shared factor forces zero
    P f = (x - P(1)) * (x + P(2));
    P g = (x - P(1)) * (x - P(5));
    CHECK(resultant(f, g).isZero());
    std::mt19937 rng(23);
    for (int k = 0; k < 20; ++k) {
        P a = randomPoly(rng, 4), b = randomPoly(rng, 4);
        bool coprime = gcdPoly(a, b).degree() == 0;
        CHECK(resultant(a, b).isZero() == !coprime);
    }
}

TEST_CASE("algebraic number inverses (100 random over two fields)") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> cDist(-9, 9);
    auto sqrt2 = FieldExt::create(UPoly<Rational>({Rational(-2), Rational(0), Rational(1)}));
    auto omega = FieldExt::create(UPoly<Rational>({Rational(1), Rational(1), Rational(1)}));
    for (int k = 0; k < 100; ++k) {
        FieldPtr K = (k % 2 == 0) ? sqrt2 : omega;
        AlgNumber a(K, {Rational(cDist(rng)), Rational(cDist(rng))});
        if (a.isZero()) continue;
        CHECK((a * a.inv()).isOne());
    }
}

TEST_CASE("field trace") {
    auto sqrt2 = FieldExt::create(UPoly<Rational>({Rational(-2), Rational(0), Rational(1)}));
    AlgNumber theta = AlgNumber::generator(sqrt2);
    CHECK(theta.traceToQ() == Rational(0));
    CHECK((theta * theta).traceToQ() == Rational(4));  // trace of 2 in a degree-2 field
    AlgNumber mixed(sqrt2, {Rational(3), Rational(5)});
    CHECK(mixed.traceToQ() == Rational(6));
    // theta^{-1} = theta/2
    CHECK(theta.inv() == AlgNumber(sqrt2, {Rational(0), Rational(1, 2)}));
}

TEST_CASE("factorization over an extension field") {
    auto qi = FieldExt::create(UPoly<Rational>({Rational(1), Rational(0), Rational(1)}));
    UPoly<AlgNumber> p = liftPoly(UPoly<Rational>({Rational(1), Rational(0), Rational(1)}));
    auto fac = factorOverField(p, qi);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first.degree() == 1);
    CHECK(fac[1].first.degree() == 1);
    auto roots = rootsInField(p, qi);
    REQUIRE(roots.size() == 2);
    for (const auto& [r, m] : roots) CHECK((r * r + AlgNumber(1)).isZero());
}

TEST_CASE("expression parser round trip") {
    for (const char* text : {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3",
                             "1/2*s - 3*t + 7", "(s+t)^3 - s*t"}) {
        MultiPoly p = parseExpression(text);
        CHECK(parseExpression(p.str()) == p);
    }
    // unary minus binds looser than exponentiation
    CHECK(parseExpression("-s^4") == -parseExpression("s^4"));
    CHECK(parseExpression("-s^4 + t^2") == parseExpression("t^2 - s^4"));
    CHECK_THROWS_AS(parseExpression("s +* t"), ParseError);
    CHECK_THROWS_AS(parseExpression("(s"), ParseError);
    ParsedRatio r = parseRationalExpression("(s+1)/(s*t)");
    CHECK(r.num == parseExpression("s+1"));
    CHECK(r.den == parseExpression("s*t"));
}

TEST_CASE("multivariate arithmetic and division") {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    MultiPoly g = parseExpression("s-2*t+1");
    CHECK((f * g).tryDivide(g).has_value());
    CHECK(*(f * g).tryDivide(g) == f);
    CHECK_FALSE(f.tryDivide(g).has_value());
    CHECK(f.derivative("t") == parseExpression("-2*t"));
    CHECK(f.eval({AlgNumber(1), AlgNumber(1)}) == AlgNumber(1));
    MultiPoly sh = f.shifted({AlgNumber(-1), AlgNumber(0)});
    CHECK(sh.eval({AlgNumber(0), AlgNumber(0)}).isZero());
}

TEST_CASE("bivariate factorization and gcd") {
    MultiPoly p = parseExpression("s*t*(s+t-1)");
    BivariateFactors bf = factorBivariate(p);
    CHECK(bf.factors.size() == 3);
    MultiPoly back = MultiPoly::constant(bf.unit);
    for (const auto& [f, m] : bf.factors)
        for (long i = 0; i < m; ++i) back = back * f;
    CHECK(back == p);
    CHECK(isSquarefreeBivariate(p));
    CHECK_FALSE(isSquarefreeBivariate(p * parseExpression("s")));
    MultiPoly a = parseExpression("(s+t)*(s-t)");
    MultiPoly b = parseExpression("(s+t)*(s+2*t)");
    MultiPoly g = gcdBivariate(a, b);
    CHECK(a.tryDivide(g).has_value());
    CHECK(b.tryDivide(g).has_value());
    CHECK(g.totalDegree() == 1);
}
