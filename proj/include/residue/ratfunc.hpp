#pragma once

#include <vector>

#include "residue/multipoly.hpp"

namespace parshin {

// gcd of two bivariate polynomials (primitive PRS), normalized so the
// grlex-leading coefficient is 1.
MultiPoly gcdBivariate(const MultiPoly& a, const MultiPoly& b);

// numerator / denominator with the gcd removed and the denominator's
// grlex-leading coefficient normalized to 1.
class RationalFunction {
  public:
    RationalFunction() : num_(MultiPoly()), den_(MultiPoly::constant(AlgNumber(1))) {}
    RationalFunction(MultiPoly num, MultiPoly den);
    explicit RationalFunction(MultiPoly num);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;

    RationalFunction derivative(const std::string& var) const;

    std::string str() const;

  private:
    MultiPoly num_, den_;
};

struct BivariateFactors {
    AlgNumber unit;
    std::vector<std::pair<MultiPoly, long>> factors;  // irreducible over Q, grlex-lc 1
};

// Factor a bivariate polynomial with rational coefficients over Q.
// Requires a constant leading coefficient in t or in s after content removal
// (true for every curve and denominator this project handles).
BivariateFactors factorBivariate(const MultiPoly& p);

bool isSquarefreeBivariate(const MultiPoly& p);

}  // namespace parshin
