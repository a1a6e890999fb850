#include "residue/zfactor.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace parshin {
namespace {

using ZPoly = std::vector<mpz_class>;  // dense, c[i] coeff of x^i, trailing nonzero

void znormalize(ZPoly& a, const mpz_class& p) {
    for (auto& c : a) {
        c %= p;
        if (c < 0) c += p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zdeg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    znormalize(r, p);
    return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b, const mpz_class& p) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    znormalize(a, p);
    return a;
}

mpz_class zinvmod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("non-invertible residue");
    return r;
}

ZPoly zmonic(ZPoly a, const mpz_class& p) {
    if (a.empty()) return a;
    mpz_class inv = zinvmod(a.back(), p);
    for (auto& c : a) c = (c * inv) % p;
    znormalize(a, p);
    return a;
}

ZPoly zrem(ZPoly a, const ZPoly& b, const mpz_class& p) {
    ZPoly bm = zmonic(b, p);
    while (zdeg(a) >= zdeg(bm) && !a.empty()) {
        long k = zdeg(a) - zdeg(bm);
        mpz_class c = a.back();
        for (std::size_t i = 0; i < bm.size(); ++i) a[static_cast<std::size_t>(k) + i] -= c * bm[i];
        znormalize(a, p);
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b, const mpz_class& p) {
    while (!b.empty()) {
        ZPoly r = zrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zmonic(a, p);
}

ZPoly zpowmod(ZPoly base, mpz_class e, const ZPoly& mod, const mpz_class& p) {
    ZPoly acc = {mpz_class(1)};
    base = zrem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = zrem(zmul(acc, base, p), mod, p);
        base = zrem(zmul(base, base, p), mod, p);
        e >>= 1;
    }
    return acc;
}

ZPoly zquo(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
    // exact quotient of monic division
    ZPoly r = a, bm = zmonic(b, p), q;
    if (zdeg(a) < zdeg(bm)) return {};
    q.assign(static_cast<std::size_t>(zdeg(a) - zdeg(bm)) + 1, mpz_class(0));
    while (zdeg(r) >= zdeg(bm) && !r.empty()) {
        long k = zdeg(r) - zdeg(bm);
        mpz_class c = r.back();
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < bm.size(); ++i) r[static_cast<std::size_t>(k) + i] -= c * bm[i];
        znormalize(r, p);
    }
    return q;
}

gmp_randclass& rng() {
    static gmp_randclass r(gmp_randinit_default);
    static bool seeded = [] {
        r.seed(20240817UL);
        return true;
    }();
    (void)seeded;
    return r;
}

// Cantor-Zassenhaus equal-degree splitting: a monic, product of irreducibles
// of degree d.
void equalDegreeFactor(const ZPoly& a, long d, const mpz_class& p, std::vector<ZPoly>& out) {
    if (zdeg(a) == d) {
        out.push_back(a);
        return;
    }
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class e = (pd - 1) / 2;
    while (true) {
        ZPoly r(static_cast<std::size_t>(zdeg(a)), mpz_class(0));
        for (auto& c : r) c = rng().get_z_range(p);
        znormalize(r, p);
        if (r.empty()) continue;
        ZPoly t = zpowmod(r, e, a, p);
        if (t.empty()) continue;
        t[0] = (t[0] - 1) % p;
        if (t[0] < 0) t[0] += p;
        znormalize(t, p);
        ZPoly g = zgcd(t, a, p);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(a)) {
            equalDegreeFactor(g, d, p, out);
            equalDegreeFactor(zquo(a, g, p), d, p, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a monic squarefree poly.
std::vector<ZPoly> factorModP(ZPoly f, const mpz_class& p) {
    std::vector<ZPoly> out;
    ZPoly x = {mpz_class(0), mpz_class(1)};
    ZPoly h = x;
    long d = 0;
    while (zdeg(f) > 0) {
        ++d;
        if (2 * d > zdeg(f)) {
            out.push_back(zmonic(f, p));
            break;
        }
        h = zpowmod(h, p, f, p);
        ZPoly g = zgcd(zsub(h, x, p), f, p);
        if (zdeg(g) > 0) {
            equalDegreeFactor(g, d, p, out);
            f = zquo(f, g, p);
            h = zrem(h, f, p);
        }
    }
    return out;
}

mpz_class symmetric(const mpz_class& c, const mpz_class& p) {
    return (2 * c > p) ? mpz_class(c - p) : c;
}

// integer content (positive)
mpz_class icontent(const std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Convert a monic rational poly to a primitive integer poly (positive lc).
std::vector<mpz_class> toPrimitiveInt(const UPoly<Rational>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
    mpz_class g = icontent(v);
    if (g > 0)
        for (auto& c : v) c /= g;
    if (!v.empty() && v.back() < 0)
        for (auto& c : v) c = -c;
    return v;
}

UPoly<Rational> fromInt(const std::vector<mpz_class>& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.push_back(Rational(z));
    return UPoly<Rational>(std::move(c));
}

// Factor a monic squarefree rational polynomial into monic irreducibles.
std::vector<UPoly<Rational>> factorSquarefree(const UPoly<Rational>& sf) {
    long n = sf.degree();
    if (n <= 1) return {sf};

    std::vector<mpz_class> fz = toPrimitiveInt(sf);
    mpz_class lc = fz.back();

    // Mignotte-style bound on coefficients of lc * (any monic-normalized factor)
    mpf_class norm2sq(0);
    for (const auto& c : fz) norm2sq += mpf_class(c) * mpf_class(c);
    mpf_class norm2 = sqrt(norm2sq) + 1;
    mpz_class bound(1);
    bound <<= static_cast<unsigned long>(n + 1);
    bound *= mpz_class(norm2) + 1;
    bound *= lc;

    mpz_class p = 2 * bound + 3;
    ZPoly fp;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (lc % p == 0) continue;
        fp = fz;
        znormalize(fp, p);
        ZPoly d = fp;
        // derivative mod p
        ZPoly dp;
        for (std::size_t i = 1; i < d.size(); ++i) dp.push_back(d[i] * static_cast<long>(i));
        znormalize(dp, p);
        if (zdeg(zgcd(fp, dp, p)) == 0) break;
    }

    std::vector<ZPoly> mods = factorModP(zmonic(fp, p), p);
    std::sort(mods.begin(), mods.end(),
              [](const ZPoly& a, const ZPoly& b) { return zdeg(a) < zdeg(b); });

    std::vector<UPoly<Rational>> out;
    UPoly<Rational> rem = sf;
    std::vector<bool> used(mods.size(), false);
    std::size_t nLeft = mods.size();

    // subset recombination; factors found smallest-subset-first are irreducible
    for (std::size_t sz = 1; sz <= mods.size(); ++sz) {
        if (nLeft == 0) break;
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < mods.size(); ++i)
            if (!used[i]) avail.push_back(i);
        if (sz > avail.size()) break;
        std::vector<bool> mask(avail.size(), false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(sz), true);
        bool restart = false;
        do {
            ZPoly cand = {mpz_class(lc % p)};
            for (std::size_t i = 0; i < avail.size(); ++i)
                if (mask[i]) cand = zmul(cand, mods[avail[i]], p);
            std::vector<mpz_class> lifted;
            lifted.reserve(cand.size());
            for (const auto& c : cand) lifted.push_back(symmetric(c, p));
            mpz_class g = icontent(lifted);
            if (g > 0)
                for (auto& c : lifted) c /= g;
            UPoly<Rational> candQ = fromInt(lifted).monic();
            auto [q, r] = rem.divmod(candQ);
            if (r.isZero()) {
                out.push_back(candQ);
                rem = q;
                for (std::size_t i = 0; i < avail.size(); ++i)
                    if (mask[i]) {
                        used[avail[i]] = true;
                        --nLeft;
                    }
                restart = true;
                break;
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
        if (restart) --sz;  // retry same size with the reduced factor pool
    }
    if (rem.degree() > 0) out.push_back(rem.monic());
    return out;
}

}  // namespace

QFactorization factorOverQ(const UPoly<Rational>& p) {
    if (p.isZero()) throw DomainError("factorization of zero polynomial");
    QFactorization res;
    res.unit = p.lc();
    auto sq = squarefreeDecompose(p);
    for (const auto& [part, mult] : sq) {
        for (const auto& irr : factorSquarefree(part)) res.factors.emplace_back(irr, mult);
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    return res;
}

bool isIrreducibleOverQ(const UPoly<Rational>& p) {
    if (p.degree() < 1) return false;
    auto f = factorOverQ(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<std::pair<Rational, long>> rationalRoots(const UPoly<Rational>& p) {
    std::vector<std::pair<Rational, long>> roots;
    for (const auto& [irr, mult] : factorOverQ(p).factors) {
        if (irr.degree() == 1) roots.emplace_back(-irr.coeff(0), mult);
    }
    return roots;
}

}  // namespace parshin
