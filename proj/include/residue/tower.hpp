#pragma once

#include <string>
#include <vector>

#include "residue/laurent.hpp"

namespace parshin {

// Element of the two-level field k((u))((g)), truncated in both variables.
// Coefficients of g^n are Laurent series in u, stored densely on
// [gLow, gKnowEnd); each carries its own u-window.
class TowerSeries {
  public:
    static constexpr long kExact = LaurentSeries::kExact;

    TowerSeries() : gLow_(kExact), gKnowEnd_(kExact) {}  // exact zero
    TowerSeries(long gLow, std::vector<LaurentSeries> coeffs, long gKnowEnd);

    static TowerSeries zeroTo(long gKnowEnd);
    static TowerSeries fromLaurent(LaurentSeries c, long gKnowEnd = kExact);
    static TowerSeries monomialG(LaurentSeries c, long gOrder, long gKnowEnd = kExact);
    static TowerSeries gVar(long gKnowEnd = kExact) {
        return monomialG(LaurentSeries::constant(AlgNumber(1)), 1, gKnowEnd);
    }

    bool isZeroToPrecision() const;
    long gKnowEnd() const { return gKnowEnd_; }
    long gLow() const { return gLow_; }
    const std::vector<LaurentSeries>& coeffs() const { return c_; }

    // coefficient of g^order; throws PrecisionLoss when order >= gKnowEnd
    LaurentSeries coeffG(long order) const;
    // coefficient of u^uOrder g^gOrder
    AlgNumber coeffAt(long uOrder, long gOrder) const { return coeffG(gOrder).coeff(uOrder); }

    TowerSeries operator-() const;
    TowerSeries operator+(const TowerSeries& o) const;
    TowerSeries operator-(const TowerSeries& o) const;
    TowerSeries operator*(const TowerSeries& o) const;
    TowerSeries operator/(const TowerSeries& o) const { return *this * o.inv(); }
    TowerSeries scaled(const AlgNumber& k) const;
    TowerSeries scaledU(const LaurentSeries& c) const;  // multiply by a pure u-series
    TowerSeries inv(long exactWindow = 64) const;
    TowerSeries shiftedG(long n) const;  // * g^n
    TowerSeries truncatedG(long newKnowEnd) const;
    TowerSeries truncatedU(long uKnowEnd) const;  // truncate every u-window

    TowerSeries derivU() const;
    TowerSeries derivG() const;

    std::string str() const;

  private:
    void normalize();
    long gLow_;
    std::vector<LaurentSeries> c_;  // c_[i] = coeff of g^(gLow_+i)
    long gKnowEnd_;
};

// f(S, T) for a two-variable polynomial, Horner in both levels
TowerSeries evalAtTower(const MultiPoly& f, const TowerSeries& S, const TowerSeries& T);

}  // namespace parshin
