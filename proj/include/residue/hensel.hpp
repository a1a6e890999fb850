#pragma once

#include "residue/puiseux.hpp"
#include "residue/ratfunc.hpp"
#include "residue/tower.hpp"

namespace parshin {

// Deformed branch coordinates: f(point + (S, T)) = g identically within the
// window. Exactly one of S, T depends on g; deformedT records which. Both
// series stay centered at the branch point.
struct HenselPair {
    TowerSeries S, T;
    bool deformedT = true;
};

// Solve f(S, T) = g along the branch: the undeformed coordinate is the branch
// parametrization, the other is corrected order-by-order in g. Falls back to
// deforming S when ∂f/∂t vanishes along the branch; throws DomainError when
// both partials vanish identically (non-reduced input), PrecisionLoss when
// the window cannot decide.
HenselPair henselDeform(const MultiPoly& f, const PuiseuxBranch& branch,
                        const PrecisionBudget& budget);

// Same, but with the deformed coordinate chosen by the caller (used by the
// normalization-independence check). Throws PrecisionLoss when the required
// partial cannot be certified nonzero.
HenselPair henselDeformForced(const MultiPoly& f, const PuiseuxBranch& branch,
                              const PrecisionBudget& budget, bool deformT);

// r(point + S, point + T) as a tower series; point offsets are taken from
// the branch by the caller (S, T here are absolute substitutions for s, t).
TowerSeries towerSubstitute(const RationalFunction& r, const TowerSeries& S,
                            const TowerSeries& T, const PrecisionBudget& budget);

}  // namespace parshin
