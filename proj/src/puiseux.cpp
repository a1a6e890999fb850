#include "residue/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "residue/errors.hpp"

namespace parshin {

namespace {

// branch data relative to the current recursion level: s = lambda·u^e, t = T(u)
struct RawBranch {
    long e;
    AlgNumber lambda;
    LaurentSeries T;
    FieldPtr field;
    long classSize;
};

AlgNumber algPow(const AlgNumber& a, long n) {
    AlgNumber base = n < 0 ? a.inv() : a;
    long m = n < 0 ? -n : n;
    AlgNumber r(1);
    for (long k = 0; k < m; ++k) r = r * base;
    return r;
}

bool vanishesAtOrigin(const MultiPoly& f) {
    std::vector<int> zero(f.vars().size(), 0);
    auto it = f.terms().find(zero);
    return it == f.terms().end();
}

bool divisibleByT(const MultiPoly& f) {
    for (const auto& [exp, c] : f.terms())
        if (exp[1] == 0) return false;
    return !f.isZero();
}

bool divisibleByS(const MultiPoly& f) {
    for (const auto& [exp, c] : f.terms())
        if (exp[0] == 0) return false;
    return !f.isZero();
}

MultiPoly divideByVar(const MultiPoly& f, std::size_t varIndex) {
    MultiPoly::TermMap m;
    for (const auto& [exp, c] : f.terms()) {
        auto e = exp;
        e[varIndex] -= 1;
        m.emplace(std::move(e), c);
    }
    return MultiPoly(f.vars(), std::move(m));
}

AlgNumber coeffAt(const MultiPoly& f, int i, int j) {
    auto it = f.terms().find({i, j});
    return it == f.terms().end() ? AlgNumber(0) : it->second;
}

// solve G(s, t) = 0 for t(s) with t(0) = 0, given G_t(0,0) != 0
LaurentSeries solveSimpleRoot(const MultiPoly& G, long window) {
    if (divisibleByT(G)) return LaurentSeries();  // t = 0 exactly
    MultiPoly Gt = G.derivative(G.vars()[1]);
    LaurentSeries uW = LaurentSeries::var().truncated(window);
    LaurentSeries x;  // exact zero start
    for (int iter = 0; iter < 80; ++iter) {
        LaurentSeries num = evalAtSeries(G, uW, x);
        LaurentSeries den = evalAtSeries(Gt, uW, x);
        LaurentSeries next = (x - num / den).truncated(window);
        if (!x.isExactZero() && next == x) return next;
        x = next;
    }
    throw PrecisionLoss("implicit solve failed to stabilize");
}

struct Edge {
    long p, q;    // slope -q/p, reduced
    long j1, i1;  // left endpoint (smallest t-exponent)
    long j2;      // right endpoint
};

long cross(long ax, long ay, long bx, long by, long cx, long cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

// negative-slope edges of the lower Newton polygon of F's support in (j, i)
// with j the t-exponent, i the s-exponent
std::vector<Edge> newtonEdges(const MultiPoly& F) {
    std::map<long, long> minI;  // j -> min i
    for (const auto& [exp, c] : F.terms()) {
        long i = exp[0], j = exp[1];
        auto it = minI.find(j);
        if (it == minI.end() || i < it->second) minI[j] = i;
    }
    std::vector<std::pair<long, long>> pts(minI.begin(), minI.end());  // (j, i), j ascending
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2].first, hull[hull.size() - 2].second,
                     hull.back().first, hull.back().second, p.first, p.second) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        long j1 = hull[k].first, i1 = hull[k].second;
        long j2 = hull[k + 1].first, i2 = hull[k + 1].second;
        if (i2 >= i1) break;  // slope no longer negative
        long dj = j2 - j1, di = i1 - i2;
        long g = std::gcd(dj, di);
        edges.push_back(Edge{dj / g, di / g, j1, i1, j2});
    }
    return edges;
}

std::vector<RawBranch> expandRec(const MultiPoly& F, const FieldPtr& K,
                                 const PrecisionBudget& budget, int depth) {
    if (depth > 60) throw DomainError("Puiseux expansion failed to separate branches");
    if (divisibleByS(F))
        throw DomainError("unexpected s-component inside branch expansion");

    std::vector<RawBranch> out;
    MultiPoly G = F;
    if (divisibleByT(G)) {
        // t = 0 solves exactly; the branch terminates as a polynomial
        out.push_back(RawBranch{1, AlgNumber(1), LaurentSeries(), K, 1});
        G = divideByVar(G, 1);
    }
    if (!vanishesAtOrigin(G)) return out;

    // smooth in t: one branch, implicit-function expansion
    if (!coeffAt(G, 0, 1).isZero()) {
        out.push_back(
            RawBranch{1, AlgNumber(1), solveSimpleRoot(G, budget.innerTerms), K, 1});
        return out;
    }

    for (const Edge& ed : newtonEdges(G)) {
        // characteristic polynomial of the edge, compressed: psi(y) with the
        // geometric coefficient c satisfying c^p = y (up to the unit y^b below)
        std::vector<AlgNumber> psi;
        for (long j = ed.j1; j <= ed.j2; j += ed.p) {
            // i on the edge line: p*i + q*j = p*i1 + q*j1
            long i = ed.i1 - ed.q * (j - ed.j1) / ed.p;
            psi.push_back(coeffAt(G, static_cast<int>(i), static_cast<int>(j)));
        }
        UPoly<AlgNumber> psiPoly(psi);
        // Bezout pair for the rational substitution: b*p - a*q = 1
        long a = 0, b = 0;
        for (long bb = 1; bb <= ed.q + 1 && b == 0; ++bb)
            if ((bb * ed.p - 1) % ed.q == 0) {
                b = bb;
                a = (bb * ed.p - 1) / ed.q;
            }
        for (const auto& [phi, mult] : factorOverField(psiPoly, K)) {
            AlgNumber y;
            FieldPtr K2 = K;
            long classMult = 1;
            if (phi.degree() == 1) {
                y = -phi.coeffs()[0];
            } else {
                if (K != nullptr)
                    throw UnsupportedExtension(
                        "branch data requires a nested field extension");
                K2 = FieldExt::create(lowerPoly(phi));
                y = AlgNumber::generator(K2);
                classMult = phi.degree();
            }
            // substitute s -> y^a s^p, t -> y^b s^q (1 + t); divide by s^N
            long N = ed.p * ed.i1 + ed.q * ed.j1;
            MultiPoly onept =
                MultiPoly::constant(AlgNumber(1), G.vars()) + MultiPoly::variable(G.vars()[1], G.vars());
            std::vector<MultiPoly> ctPow{MultiPoly::constant(AlgNumber(1), G.vars())};
            MultiPoly H(G.vars());
            for (const auto& [exp, c] : G.terms()) {
                long i = exp[0], j = exp[1];
                while (static_cast<long>(ctPow.size()) <= j)
                    ctPow.push_back(ctPow.back() * onept);
                long ord = ed.p * i + ed.q * j - N;
                if (ord < 0) throw DomainError("Newton polygon edge inconsistency");
                AlgNumber coef = c * algPow(y, a * i + b * j - a * ed.i1 - b * ed.j1);
                MultiPoly sPow(G.vars(),
                               {{{static_cast<int>(ord), 0}, AlgNumber(1)}});
                H = H + (ctPow[static_cast<std::size_t>(j)] * sPow).scaled(coef);
            }
            std::vector<RawBranch> subs =
                (mult == 1 && !coeffAt(H, 0, 1).isZero())
                    ? std::vector<RawBranch>{RawBranch{
                          1, AlgNumber(1), solveSimpleRoot(H, budget.innerTerms), K2, 1}}
                    : expandRec(H, K2, budget, depth + 1);
            for (auto& sub : subs) {
                // s = y^a (lambda1 u^e1)^p, t = y^b (lambda1 u^e1)^q (1 + T1)
                AlgNumber yb = algPow(y, b) * algPow(sub.lambda, ed.q);
                LaurentSeries T = (LaurentSeries::constant(AlgNumber(1)) + sub.T)
                                      .shifted(ed.q * sub.e)
                                      .scaled(yb);
                AlgNumber lam = algPow(y, a) * algPow(sub.lambda, ed.p);
                out.push_back(RawBranch{ed.p * sub.e, std::move(lam), std::move(T),
                                        sub.field, classMult * sub.classSize});
            }
        }
    }
    return out;
}

// divide a common factor out of all exponents so the parametrization is primitive
void makePrimitive(RawBranch& b) {
    long d = b.e;
    for (std::size_t i = 0; i < b.T.coeffs().size() && d > 1; ++i)
        if (!b.T.coeffs()[i].isZero())
            d = std::gcd(d, b.T.low() + static_cast<long>(i));
    if (d <= 1) return;
    // only safe when every known exponent is divisible by d
    std::vector<AlgNumber> v;
    long lowD = b.T.low() / d;
    long keD = b.T.knowEnd() >= LaurentSeries::kExact ? LaurentSeries::kExact
                                                      : b.T.knowEnd() / d;
    for (long n = lowD; n < lowD + static_cast<long>((b.T.coeffs().size() + d - 1) / d); ++n)
        v.push_back(b.T.coeffs()[static_cast<std::size_t>(n * d - b.T.low())]);
    b.T = LaurentSeries(lowD, std::move(v), keD);
    b.e /= d;
}

bool lsOrderedBefore(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.low() != b.low()) return a.low() < b.low();
    std::size_t n = std::min(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i] == b.coeffs()[i]) continue;
        return a.coeffs()[i].orderedBefore(b.coeffs()[i]);
    }
    return a.coeffs().size() < b.coeffs().size();
}

}  // namespace

bool branchOrderedBefore(const PuiseuxBranch& a, const PuiseuxBranch& b) {
    std::string fa = a.residueField ? a.residueField->minPolyText() : "";
    std::string fb = b.residueField ? b.residueField->minPolyText() : "";
    if (fa != fb) return fa < fb;
    if (a.e != b.e) return a.e < b.e;
    if (!(a.S == b.S)) return lsOrderedBefore(a.S, b.S);
    return lsOrderedBefore(a.T, b.T);
}

std::vector<PuiseuxBranch> newtonPuiseux(const MultiPoly& f, const AlgNumber& ps,
                                         const AlgNumber& pt, const PrecisionBudget& budget) {
    MultiPoly f0 = f.shifted({ps, pt});
    if (!vanishesAtOrigin(f0))
        throw DomainError("curve does not vanish at the given point");
    FieldPtr K = f0.coefficientField();

    std::vector<PuiseuxBranch> branches;
    auto pushAxis = [&](bool sAxis) {
        PuiseuxBranch b;
        b.pointS = ps;
        b.pointT = pt;
        b.e = 1;
        if (sAxis) {  // component t = 0
            b.S = LaurentSeries::var();
            b.T = LaurentSeries();
        } else {  // component s = 0
            b.S = LaurentSeries();
            b.T = LaurentSeries::var();
        }
        b.residueField = K;
        b.conjugacyClassSize = 1;
        branches.push_back(std::move(b));
    };

    MultiPoly F = f0;
    if (divisibleByT(F)) {
        pushAxis(true);
        F = divideByVar(F, 1);
    }
    if (divisibleByS(F)) {
        pushAxis(false);
        F = divideByVar(F, 0);
    }
    if (!F.isConstant() && vanishesAtOrigin(F)) {
        for (RawBranch& rb : expandRec(F, K, budget, 0)) {
            makePrimitive(rb);
            PuiseuxBranch b;
            b.pointS = ps;
            b.pointT = pt;
            b.e = rb.e;
            b.S = LaurentSeries::monomial(rb.lambda, rb.e);
            b.T = std::move(rb.T);
            b.residueField = rb.field;
            b.conjugacyClassSize = rb.classSize;
            branches.push_back(std::move(b));
        }
    }
    if (branches.empty())
        throw DomainError("no branch of the curve passes through the point");
    std::sort(branches.begin(), branches.end(), branchOrderedBefore);
    return branches;
}

}  // namespace parshin
