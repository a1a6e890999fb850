#pragma once

#include <memory>
#include <string>
#include <vector>

#include "residue/rational.hpp"
#include "residue/upoly.hpp"

namespace parshin {

// A simple extension Q(θ)/Q. The coefficient tower is fixed at one level:
// elements live in Q or in a single Q(θ); anything deeper is rejected.
class FieldExt {
  public:
    // m must be monic irreducible of degree >= 2 (degree 1 collapses to Q,
    // callers handle that before constructing).
    static std::shared_ptr<const FieldExt> create(UPoly<Rational> m,
                                                  std::string generatorName = "θ");

    long degree() const { return minPoly_.degree(); }
    const UPoly<Rational>& minPoly() const { return minPoly_; }
    const std::string& generatorName() const { return name_; }
    std::string minPolyText() const;  // e.g. "θ^2+1"

  private:
    FieldExt(UPoly<Rational> m, std::string name)
        : minPoly_(std::move(m)), name_(std::move(name)) {}
    UPoly<Rational> minPoly_;
    std::string name_;
};

using FieldPtr = std::shared_ptr<const FieldExt>;

// Same field iff both Q, or the minimal polynomials coincide.
bool sameField(const FieldPtr& a, const FieldPtr& b);

// Element of Q or of a simple extension Q(θ).
class AlgNumber {
  public:
    AlgNumber() : c_{Rational(0)} {}
    AlgNumber(long n) : c_{Rational(n)} {}
    AlgNumber(Rational r) : c_{std::move(r)} {}
    AlgNumber(FieldPtr ext, std::vector<Rational> coeffs);

    static AlgNumber generator(const FieldPtr& ext);

    bool isZero() const;
    bool isOne() const;
    bool isRational() const { return ext_ == nullptr; }
    const FieldPtr& ext() const { return ext_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational rationalValue() const;  // throws unless isRational()

    AlgNumber operator-() const;
    AlgNumber operator+(const AlgNumber& o) const;
    AlgNumber operator-(const AlgNumber& o) const;
    AlgNumber operator*(const AlgNumber& o) const;
    AlgNumber inv() const;
    AlgNumber operator/(const AlgNumber& o) const { return *this * o.inv(); }
    bool operator==(const AlgNumber& o) const { return (*this - o).isZero(); }
    bool operator!=(const AlgNumber& o) const { return !(*this == o); }

    // Field trace down to Q, via the multiplication-by-this matrix in the
    // power basis of θ.
    Rational traceToQ() const;

    // Deterministic total order (field text, then coefficients); used only
    // for canonical sorting of reports.
    bool orderedBefore(const AlgNumber& o) const;

    std::string str() const;

  private:
    AlgNumber lifted(const FieldPtr& ext) const;
    FieldPtr ext_;                 // nullptr = Q
    std::vector<Rational> c_;      // length 1 (Q) or deg(ext)
};

AlgNumber operator*(long n, const AlgNumber& a);

// The shared extension of two values (throws on a genuine mismatch of two
// distinct extensions).
FieldPtr commonField(const FieldPtr& a, const FieldPtr& b);

// Full factorization over Q(θ) (Trager's norm method), or over Q when
// ext == nullptr. Factors are monic; unit is discarded.
std::vector<std::pair<UPoly<AlgNumber>, long>> factorOverField(const UPoly<AlgNumber>& p,
                                                               const FieldPtr& ext);

// Roots lying in the given field, with multiplicity.
std::vector<std::pair<AlgNumber, long>> rootsInField(const UPoly<AlgNumber>& p,
                                                     const FieldPtr& ext);

UPoly<AlgNumber> liftPoly(const UPoly<Rational>& p);
UPoly<Rational> lowerPoly(const UPoly<AlgNumber>& p);  // throws unless all rational

}  // namespace parshin
