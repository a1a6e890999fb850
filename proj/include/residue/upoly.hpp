#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "residue/errors.hpp"
#include "residue/rational.hpp"

namespace parshin {

// Dense univariate polynomial over a coefficient ring K.
// K must provide: K(long), isZero(), operator+ - * unary-, and (for field
// operations) inv(). Members only instantiate on use, so ring-only K works
// for the generic subresultant path.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    UPoly(long c) { c_ = {K(c)}; normalize(); }
    explicit UPoly(K c) { c_ = {std::move(c)}; normalize(); }
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UPoly x() { return monomial(K(1), 1); }
    static UPoly monomial(K c, std::size_t deg) {
        std::vector<K> v(deg + 1, K(0));
        v[deg] = std::move(c);
        return UPoly(std::move(v));
    }

    bool isZero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    UPoly operator-() const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return UPoly(std::move(v));
    }
    UPoly operator+(const UPoly& o) const {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
        return UPoly(std::move(v));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (isZero() || o.isZero()) return UPoly();
        std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return UPoly(std::move(v));
    }
    UPoly scaled(const K& k) const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * k);
        return UPoly(std::move(v));
    }
    UPoly shifted(std::size_t n) const {  // multiply by x^n
        if (isZero()) return UPoly();
        std::vector<K> v(c_.size() + n, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + n] = c_[i];
        return UPoly(std::move(v));
    }

    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] - o.c_[i]).isZero()) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> v(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(v));
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(x + a), exact Taylor shift
    UPoly shiftArg(const K& a) const {
        UPoly res;
        for (std::size_t i = c_.size(); i-- > 0;) {
            res = res * (UPoly::x() + UPoly(a)) + UPoly(c_[i]);
        }
        return res;
    }

    // x^deg * p(1/x)
    UPoly reversed() const {
        std::vector<K> v(c_.rbegin(), c_.rend());
        return UPoly(std::move(v));
    }

    // Field-coefficient division with remainder.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.isZero()) throw DomainError("polynomial division by zero");
        UPoly r = *this;
        if (r.degree() < d.degree()) return {UPoly(), r};
        std::vector<K> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, K(0));
        K dinv = d.lc().inv();
        while (!r.isZero() && r.degree() >= d.degree()) {
            std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
            K c = r.lc() * dinv;
            q[k] = c;
            r = r - d.scaled(c).shifted(k);
        }
        return {UPoly(std::move(q)), r};
    }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly monic() const {
        if (isZero()) return *this;
        return scaled(lc().inv());
    }

    // Pseudo-division over a ring: lc(d)^e * this = q*d + r with deg r < deg d.
    // Returns (q, r, e).
    std::tuple<UPoly, UPoly, long> pseudoDivmod(const UPoly& d) const {
        if (d.isZero()) throw DomainError("pseudo-division by zero");
        UPoly r = *this, q;
        long e = 0;
        while (!r.isZero() && r.degree() >= d.degree()) {
            std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
            UPoly t = UPoly::monomial(r.lc(), k);
            q = q.scaled(d.lc()) + t;
            r = r.scaled(d.lc()) - t * d;
            ++e;
        }
        return {q, r, e};
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// --- field-coefficient helpers -------------------------------------------

template <class K>
UPoly<K> gcdPoly(UPoly<K> a, UPoly<K> b) {
    while (!b.isZero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = gcd(a,b) monic, with s*a + t*b = g
template <class K>
void extendedGcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0(1), s1, t0, t1(1);
    while (!r1.isZero()) {
        auto [q, r2] = r0.divmod(r1);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.isZero()) { g = r0; s = s0; t = t0; return; }
    K u = r0.lc().inv();
    g = r0.scaled(u);
    s = s0.scaled(u);
    t = t0.scaled(u);
}

// Yun's squarefree decomposition over a field of characteristic 0.
// Returns [(p1,1), (p2,2), ...] with input = lc * prod pi^i, pi monic squarefree.
template <class K>
std::vector<std::pair<UPoly<K>, long>> squarefreeDecompose(const UPoly<K>& p) {
    std::vector<std::pair<UPoly<K>, long>> out;
    if (p.isZero()) throw DomainError("squarefree decomposition of zero");
    UPoly<K> f = p.monic();
    if (f.degree() == 0) return out;
    UPoly<K> fp = f.derivative();
    UPoly<K> a = gcdPoly(f, fp);
    UPoly<K> b = f / a;
    UPoly<K> c = fp / a;
    UPoly<K> d = c - b.derivative();
    long i = 1;
    while (b.degree() > 0) {
        UPoly<K> g = gcdPoly(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// --- generic ring helpers -------------------------------------------------

template <class K>
K exactDivCoeff(const K& a, const K& b) {  // field case
    return a * b.inv();
}

template <class K>
UPoly<K> exactDivCoeff(const UPoly<K>& a, const UPoly<K>& b) {  // ring of polys
    auto [q, r, e] = a.pseudoDivmod(b);
    if (!r.isZero()) throw DomainError("inexact polynomial division");
    // q corresponds to lc(b)^e * a; undo the multiplier coefficient-wise
    K m(1);
    for (long i = 0; i < e; ++i) m = m * b.lc();
    std::vector<K> v;
    v.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) v.push_back(exactDivCoeff(c, m));
    UPoly<K> res{std::move(v)};
    if (!(res * b == a)) throw DomainError("inexact polynomial division");
    return res;
}

template <class K>
K ringPow(K base, long e) {
    K acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Resultant by the subresultant pseudo-remainder sequence. Works over any
// ring with exact division (coefficients K = field, or K = UPoly<field>).
template <class K>
K resultant(UPoly<K> a, UPoly<K> b) {
    if (a.isZero() && b.isZero()) throw DomainError("resultant of two zero polynomials");
    if (a.isZero() || b.isZero()) return K(0);
    K sign(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) return sign * ringPow(b.lc(), a.degree());

    K g(1), h(1);
    while (true) {
        long da = a.degree(), db = b.degree();
        if ((da & 1) && (db & 1)) sign = -sign;
        auto [q, r, e] = a.pseudoDivmod(b);
        (void)q;
        // pseudo-division used lc(b)^e; the subresultant algorithm expects
        // exponent delta+1, so normalize r accordingly.
        long delta = da - db;
        K lcb = b.lc();
        for (long i = e; i < delta + 1; ++i) r = r.scaled(lcb);
        if (r.isZero()) {
            if (b.degree() == 0) break;
            return K(0);
        }
        a = b;
        K divisor = g * ringPow(h, delta);
        std::vector<K> v;
        v.reserve(r.coeffs().size());
        for (const auto& c : r.coeffs()) v.push_back(exactDivCoeff(c, divisor));
        b = UPoly<K>(std::move(v));
        g = a.lc();
        if (delta >= 1) {
            K gd = ringPow(g, delta);
            h = exactDivCoeff(gd, ringPow(h, delta - 1));
        }
        if (b.degree() == 0) break;
    }
    // now deg b == 0; res = sign * lc(b)^deg(a) / h^(deg(a)-1) corrections
    long da = a.degree();
    K num = ringPow(b.lc(), da);
    K den = ringPow(h, da - 1);
    return sign * exactDivCoeff(num, den);
}

}  // namespace parshin
