#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "residue/errors.hpp"

namespace parshin {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den > 0.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // Accepts "p", "-p", "p/q".
    static Rational fromString(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
        if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool isZero() const { return q_ == 0; }
    bool isOne() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return wrap(-q_); }
    Rational operator+(const Rational& o) const { return wrap(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return wrap(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return wrap(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.isZero()) throw DomainError("rational division by zero");
        return wrap(q_ / o.q_);
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const {
        if (isZero()) throw DomainError("rational inverse of zero");
        return wrap(1 / q_);
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    // Canonical form: "p" when integral, else "p/q".
    std::string str() const { return q_.get_str(); }

  private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.q_ = q;  // gmp arithmetic on canonical operands stays canonical
        return r;
    }
    mpq_class q_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace parshin
