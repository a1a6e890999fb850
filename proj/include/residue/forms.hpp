#pragma once

#include "residue/puiseux.hpp"
#include "residue/ratfunc.hpp"

namespace parshin {

// a·ds + b·dt over the rational function field
struct DiffForm1 {
    RationalFunction cs, ct;
};

// c·ds∧dt
struct DiffForm2 {
    RationalFunction coeff;
};

// local cohomology class [p·ds∧dt / f^m]; reduced so f does not divide p.
// m may drop to 0 during reduction, in which case the class is zero.
class GeneralizedFraction {
  public:
    GeneralizedFraction(MultiPoly p, MultiPoly f, long m);

    const MultiPoly& p() const { return p_; }
    const MultiPoly& f() const { return f_; }
    long m() const { return m_; }
    bool isZeroClass() const { return m_ == 0 || p_.isZero(); }

    DiffForm2 asForm() const;

  private:
    MultiPoly p_, f_;
    long m_;
};

DiffForm1 d(const RationalFunction& r);
DiffForm2 wedge(const DiffForm1& a, const DiffForm1& b);

// coefficient of u^{-1} in a(u)·du; throws PrecisionLoss when the window
// does not certify that order
AlgNumber residue1d(const LaurentSeries& a);

}  // namespace parshin
