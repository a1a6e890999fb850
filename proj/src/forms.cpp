#include "residue/forms.hpp"

#include "residue/errors.hpp"

namespace parshin {

GeneralizedFraction::GeneralizedFraction(MultiPoly p, MultiPoly f, long m)
    : p_(std::move(p)), f_(std::move(f)), m_(m) {
    if (m_ < 0) throw DomainError("negative curve power in a generalized fraction");
    while (m_ > 0 && !p_.isZero()) {
        auto q = p_.tryDivide(f_);
        if (!q) break;
        p_ = *q;
        m_ -= 1;
    }
}

DiffForm2 GeneralizedFraction::asForm() const {
    MultiPoly den = MultiPoly::constant(AlgNumber(1), f_.vars());
    for (long k = 0; k < m_; ++k) den = den * f_;
    return DiffForm2{RationalFunction(p_, den)};
}

DiffForm1 d(const RationalFunction& r) {
    return DiffForm1{r.derivative("s"), r.derivative("t")};
}

DiffForm2 wedge(const DiffForm1& a, const DiffForm1& b) {
    return DiffForm2{a.cs * b.ct - a.ct * b.cs};
}

AlgNumber residue1d(const LaurentSeries& a) { return a.coeff(-1); }

}  // namespace parshin
