#pragma once

#include <vector>

#include "residue/laurent.hpp"
#include "residue/multipoly.hpp"

namespace parshin {

// One branch of a curve at a closed point: a conjugacy-class representative
// over the residue field k(x̃), parametrized by the regular parameter u.
// S and T are centered at the point (the point coordinates are not included).
struct PuiseuxBranch {
    AlgNumber pointS, pointT;
    long e = 1;              // ramification index (val of S when S = u^e)
    LaurentSeries S, T;
    FieldPtr residueField;   // nullptr = Q
    long conjugacyClassSize = 1;  // [k(x̃) : k(x)]
};

// All branches of {f = 0} through the given point, one per closed point of
// the normalization lying above it. Throws DomainError when f does not
// vanish at the point, UnsupportedExtension when branch data needs a second
// field extension.
std::vector<PuiseuxBranch> newtonPuiseux(const MultiPoly& f, const AlgNumber& ps,
                                         const AlgNumber& pt, const PrecisionBudget& budget);

// Deterministic order used for reports: residue-field text, then series data.
bool branchOrderedBefore(const PuiseuxBranch& a, const PuiseuxBranch& b);

}  // namespace parshin
