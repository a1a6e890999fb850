#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "residue/residues.hpp"
#include "residue/zfactor.hpp"

using namespace parshin;

namespace {

const PrecisionBudget kBudget;

LaurentSeries randomLaurent(std::mt19937& rng) {
    std::uniform_int_distribution<long> lowDist(-4, 2);
    std::uniform_int_distribution<long> lenDist(1, 6);
    std::uniform_int_distribution<long> cDist(-5, 5);
    long low = lowDist(rng), len = lenDist(rng);
    std::vector<AlgNumber> c;
    for (long i = 0; i < len; ++i) c.push_back(AlgNumber(cDist(rng)));
    return LaurentSeries(low, std::move(c), low + len + 4);
}

ResidueValue resOf(const std::string& num, const std::string& den, const Chain& chain) {
    ParsedRatio r{parseExpression(num), parseExpression(den)};
    DiffForm2 w{RationalFunction(r.num, r.den)};
    return parshinResidue(w, chain, kBudget);
}

Chain chainAtOrigin(const MultiPoly& f, std::size_t idx) {
    auto branches = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), kBudget);
    REQUIRE(idx < branches.size());
    return Chain{f, AlgNumber(0), AlgNumber(0), branches[idx]};
}

}  // namespace

TEST_CASE("one-dimensional residue: du/u and pure powers") {
    CHECK(residue1d(LaurentSeries::var().inv()) == AlgNumber(1));
    for (long i = -5; i <= 5; ++i) {
        if (i == -1) continue;
        CHECK(residue1d(LaurentSeries::monomial(AlgNumber(1), i)).isZero());
    }
}

TEST_CASE("one-dimensional residue: linearity on 50 random pairs") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> cDist(-7, 7);
    for (int k = 0; k < 50; ++k) {
        LaurentSeries x = randomLaurent(rng), y = randomLaurent(rng);
        AlgNumber a(cDist(rng)), b(cDist(rng));
        CHECK(residue1d(x.scaled(a) + y.scaled(b)) ==
              a * residue1d(x) + b * residue1d(y));
    }
}

TEST_CASE("global residue theorem on P1: fixtures") {
    auto lift = [](const char* text) {
        ParsedRatio r = parseRationalExpression(text);
        auto toS = [](const MultiPoly& p) {
            auto rec = p.toRecursive();
            return rec.coeffs().empty() ? UPoly<AlgNumber>() : rec.coeffs()[0];
        };
        return std::pair(toS(r.num), toS(r.den));
    };
    for (const char* text : {"1/(s^2-1)", "s", "(s+3)/(s^2-2)", "1/(s^2+1)",
                             "(s^2+5)/((s-1)*(s^2-3))", "7/(s^3-s)"}) {
        auto [num, den] = lift(text);
        GlobalResidueReport rep = globalResidueCheckP1(num, den);
        CHECK(rep.total.isZero());
    }
}

TEST_CASE("global residue theorem on P1: 50 random forms") {
    std::mt19937 rng(43);
    using P = UPoly<Rational>;
    std::vector<P> pool = {
        P({Rational(0), Rational(1)}),                 // s
        P({Rational(-1), Rational(1)}),                // s-1
        P({Rational(1), Rational(1)}),                 // s+1
        P({Rational(2), Rational(1)}),                 // s+2
        P({Rational(-3), Rational(1)}),                // s-3
        P({Rational(-2), Rational(0), Rational(1)}),   // s^2-2, needs Q(sqrt 2)
        P({Rational(-3), Rational(0), Rational(1)}),   // s^2-3
        P({Rational(1), Rational(0), Rational(1)}),    // s^2+1, needs Q(i)
        P({Rational(1), Rational(1), Rational(1)}),    // s^2+s+1
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
        long nd = den.degree() + 1;  // allow a pole at infinity too
        std::vector<Rational> nc(static_cast<std::size_t>(nd));
        for (auto& c : nc) c = Rational(cDist(rng));
        P num(std::move(nc));
        GlobalResidueReport rep = globalResidueCheckP1(liftPoly(num), liftPoly(den));
        CHECK(rep.total.isZero());
    }
}

TEST_CASE("local residue theorem: fixtures at the origin") {
    for (const char* den : {"s*t", "s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3"}) {
        ParsedRatio r{parseExpression("1"), parseExpression(den)};
        DiffForm2 w{RationalFunction(r.num, r.den)};
        LocalSumReport rep = localResidueTheoremCheck(w, AlgNumber(0), AlgNumber(0), kBudget);
        CHECK(!rep.terms.empty());
        CHECK(rep.total.isZero());
    }
}

TEST_CASE("local residue theorem: 20 random forms through the origin") {
    std::mt19937 rng(47);
    std::vector<MultiPoly> pool = {
        parseExpression("s"),        parseExpression("t"),
        parseExpression("t-s"),      parseExpression("t+s"),
        parseExpression("t-s^2"),    parseExpression("s-t^2"),
        parseExpression("t-2*s"),    parseExpression("t^2-s^3"),
        parseExpression("s^2*(s+1)-t^2"),
    };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> countDist(1, 3);
    std::uniform_int_distribution<long> cDist(-4, 4);
    for (int k = 0; k < 20; ++k) {
        std::set<std::size_t> chosen;
        int count = countDist(rng);
        while (static_cast<int>(chosen.size()) < count) chosen.insert(pick(rng));
        MultiPoly den = MultiPoly::constant(AlgNumber(1));
        for (auto i : chosen) den = den * pool[i];
        MultiPoly num = MultiPoly::constant(AlgNumber(cDist(rng))) +
                        parseExpression("s").scaled(AlgNumber(cDist(rng))) +
                        parseExpression("t").scaled(AlgNumber(cDist(rng))) +
                        parseExpression("s*t").scaled(AlgNumber(cDist(rng)));
        if (num.isZero()) num = MultiPoly::constant(AlgNumber(1));
        DiffForm2 w{RationalFunction(num, den)};
        LocalSumReport rep = localResidueTheoremCheck(w, AlgNumber(0), AlgNumber(0), kBudget);
        CHECK(rep.total.isZero());
    }
}

TEST_CASE("independence of the coordinate normalization (>= 10 chains)") {
    long cases = 0;
    for (const char* text : {"s^2*(s+1)-t^2", "t^2-s^3", "t^2-s^4", "s^2+t^2-s^3", "t^2-s^5"}) {
        MultiPoly f = parseExpression(text);
        auto branches = newtonPuiseux(f, AlgNumber(0), AlgNumber(0), kBudget);
        for (const auto& b : branches) {
            Chain chain{f, AlgNumber(0), AlgNumber(0), b};
            for (const char* num : {"1", "s+t+1"}) {
                DiffForm2 w{RationalFunction(parseExpression(num), f)};
                CHECK(residueIndependenceCheck(w, chain, kBudget));
                ++cases;
            }
        }
    }
    CHECK(cases >= 10);
}

TEST_CASE("node golden values") {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
    AlgNumber r0 = parshinResidue(cls, chainAtOrigin(f, 0), kBudget).value;
    AlgNumber r1 = parshinResidue(cls, chainAtOrigin(f, 1), kBudget).value;
    CHECK(r0 == AlgNumber(Rational(1, 2)));
    CHECK(r1 == AlgNumber(Rational(-1, 2)));
}

TEST_CASE("orientation calibration on the coordinate cross") {
    MultiPoly st = parseExpression("s*t");
    auto branches = newtonPuiseux(st, AlgNumber(0), AlgNumber(0), kBudget);
    REQUIRE(branches.size() == 2);
    DiffForm2 w{RationalFunction(parseExpression("1"), st)};
    AlgNumber sum(0);
    bool sawPlus = false, sawMinus = false;
    for (const auto& b : branches) {
        AlgNumber v = parshinResidue(w, Chain{st, AlgNumber(0), AlgNumber(0), b}, kBudget).value;
        if (v == AlgNumber(1)) sawPlus = true;
        if (v == AlgNumber(-1)) sawMinus = true;
        sum = sum + v;
    }
    CHECK(sawPlus);
    CHECK(sawMinus);
    CHECK(sum.isZero());
}

TEST_CASE("class representatives: adding a multiple of f does not change residues") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> cDist(-3, 3);
    std::uniform_int_distribution<int> eDist(0, 2);
    auto randomPoly = [&] {
        MultiPoly p = MultiPoly::constant(AlgNumber(0));
        for (int terms = 0; terms < 3; ++terms) {
            MultiPoly mono = MultiPoly::constant(AlgNumber(cDist(rng)));
            mono = mono * parseExpression("s").pow(eDist(rng));
            mono = mono * parseExpression("t").pow(eDist(rng));
            p = p + mono;
        }
        return p;
    };
    for (int k = 0; k < 20; ++k) {
        MultiPoly f = parseExpression(k % 2 == 0 ? "s^2*(s+1)-t^2" : "t^2-s^3");
        Chain chain = chainAtOrigin(f, 0);
        MultiPoly p = randomPoly(), q = randomPoly();
        if (p.isZero()) p = MultiPoly::constant(AlgNumber(1));
        GeneralizedFraction a(p, f, 1);
        GeneralizedFraction b(p + q * f, f, 1);
        CHECK(parshinResidue(a, chain, kBudget).value ==
              parshinResidue(b, chain, kBudget).value);
    }
}

TEST_CASE("regular forms have zero residue") {
    MultiPoly f = parseExpression("s^2*(s+1)-t^2");
    Chain chain = chainAtOrigin(f, 0);
    CHECK(resOf("s", "1", chain).value.isZero());
    CHECK(resOf("s*t+7", "1", chain).value.isZero());
    // pole on a different curve entirely
    CHECK(resOf("1", "s-1", chain).value.isZero());
}

TEST_CASE("traced values on an irrational branch") {
    MultiPoly f = parseExpression("s^2+t^2-s^3");
    Chain chain = chainAtOrigin(f, 0);
    REQUIRE(chain.branch.conjugacyClassSize == 2);
    GeneralizedFraction cls(MultiPoly::constant(AlgNumber(1)), f, 1);
    ResidueValue rv = parshinResidue(cls, chain, kBudget);
    CHECK_FALSE(rv.value.isZero());
    CHECK_FALSE(rv.value.isRational());
    CHECK(rv.tracedValue.isRational());
    CHECK(rv.tracedValue == AlgNumber(rv.value.traceToQ()));
    // the single chain carries the whole local sum, which must vanish
    CHECK(rv.tracedValue.isZero());
}
