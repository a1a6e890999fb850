#pragma once

#include <functional>
#include <string>
#include <vector>

#include "residue/forms.hpp"
#include "residue/hensel.hpp"

namespace parshin {

// saturated chain (generic point of the plane, curve, closed point/branch)
struct Chain {
    MultiPoly curve;
    AlgNumber pointS, pointT;
    PuiseuxBranch branch;
};

struct ResidueValue {
    AlgNumber value;        // in the branch residue field k(x̃)
    AlgNumber tracedValue;  // Tr_{k(x̃)/k(x)}(value), in the point field
};

// Tr_{k(x̃)/k(x)}; base is the coordinate field of the chain's point.
AlgNumber traceToBase(const AlgNumber& v, const FieldPtr& base);

// Retry fn with escalated budgets on PrecisionLoss; throws PrecisionExhausted
// after budget.maxEscalations attempts.
ResidueValue withEscalation(const PrecisionBudget& budget,
                            const std::function<ResidueValue(const PrecisionBudget&)>& fn);

ResidueValue parshinResidue(const DiffForm2& w, const Chain& chain,
                            const PrecisionBudget& budget);
ResidueValue parshinResidue(const GeneralizedFraction& cls, const Chain& chain,
                            const PrecisionBudget& budget);

// Prop.-style independence of the coordinate normalization: recompute with
// both deformations and compare exactly.
bool residueIndependenceCheck(const DiffForm2& w, const Chain& chain,
                              const PrecisionBudget& budget);

struct PoleResidue {
    std::string location;  // "s=...", "s=root-of(...)", or "infinity"
    AlgNumber traced;      // residue traced down to Q
};
struct GlobalResidueReport {
    std::vector<PoleResidue> poles;
    AlgNumber total;  // must be 0
};
// Residue theorem on P^1 for r(s) ds with r = num/den univariate.
GlobalResidueReport globalResidueCheckP1(const UPoly<AlgNumber>& num,
                                         const UPoly<AlgNumber>& den);

struct ChainResidue {
    std::string curveText;
    std::size_t branchIndex = 0;
    ResidueValue rv;
};
struct LocalSumReport {
    std::vector<ChainResidue> terms;
    AlgNumber total;  // must be 0
};
// Sum of traced Parshin residues over all chains through the point (one per
// branch of each irreducible denominator factor through it).
LocalSumReport localResidueTheoremCheck(const DiffForm2& w, const AlgNumber& ps,
                                        const AlgNumber& pt, const PrecisionBudget& budget);

}  // namespace parshin
