#pragma once

#include <string>
#include <vector>

#include "residue/multipoly.hpp"
#include "residue/numberfield.hpp"

namespace parshin {

struct PrecisionBudget {
    long innerTerms = 24;       // u-window width
    long outerTerms = 8;        // g-window width
    long escalationFactor = 2;
    long maxEscalations = 4;

    PrecisionBudget escalated() const {
        PrecisionBudget b = *this;
        b.innerTerms *= escalationFactor;
        b.outerTerms *= escalationFactor;
        return b;
    }
};

// Truncated Laurent series in one variable u over Q or Q(θ).
// Coefficients of u^n are known exactly for n < knowEnd() and stored densely
// on [low, knowEnd); orders below low are exactly zero.
class LaurentSeries {
  public:
    // knowEnd value meaning "exact" (polynomial data, no truncation)
    static constexpr long kExact = 1L << 30;

    LaurentSeries() : low_(kExact), knowEnd_(kExact) {}  // exact zero
    LaurentSeries(long low, std::vector<AlgNumber> coeffs, long knowEnd);

    static LaurentSeries zeroTo(long knowEnd);
    static LaurentSeries monomial(AlgNumber c, long order, long knowEnd = kExact);
    static LaurentSeries constant(AlgNumber c) { return monomial(std::move(c), 0); }
    static LaurentSeries var() { return monomial(AlgNumber(1), 1); }

    bool isZeroToPrecision() const { return c_.empty(); }
    bool isExactZero() const { return c_.empty() && knowEnd_ >= kExact; }
    long knowEnd() const { return knowEnd_; }
    // exact valuation when nonzero; for a (known-)zero series, the order up to
    // which it is known to vanish
    long valuationLowerBound() const { return c_.empty() ? knowEnd_ : low_; }
    long low() const { return low_; }
    const std::vector<AlgNumber>& coeffs() const { return c_; }

    // coefficient of u^order; throws PrecisionLoss when order >= knowEnd
    AlgNumber coeff(long order) const;

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
    LaurentSeries scaled(const AlgNumber& c) const;
    // throws PrecisionLoss when zero to precision; exactWindow is the window
    // width used when the input carries no truncation of its own
    LaurentSeries inv(long exactWindow = 64) const;
    LaurentSeries shifted(long n) const;  // * u^n
    LaurentSeries truncated(long newKnowEnd) const;
    LaurentSeries derivative() const;

    bool operator==(const LaurentSeries& o) const;  // same window and values

    FieldPtr coefficientField() const;

    std::string str(const std::string& var = "u") const;

  private:
    void normalize();
    long low_;
    std::vector<AlgNumber> c_;  // c_[i] = coeff of u^(low_+i); front nonzero
    long knowEnd_;
};

// p(x) with x = a Laurent series (Horner)
LaurentSeries evalAtSeries(const UPoly<AlgNumber>& p, const LaurentSeries& x);

// f(S, T) for a two-variable polynomial
LaurentSeries evalAtSeries(const MultiPoly& f, const LaurentSeries& S, const LaurentSeries& T);

}  // namespace parshin
