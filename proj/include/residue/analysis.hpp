#pragma once

#include <vector>

#include "residue/residues.hpp"

namespace parshin {

struct SingularPoint {
    AlgNumber s, t;
    FieldPtr field;  // coordinate field (nullptr = Q)
};

// Common zeros of (f, f_s, f_t), one representative per conjugacy class,
// found via resultants and univariate factorization. Throws DomainError when
// f is not squarefree or exceeds the degree cap, UnsupportedExtension when a
// point needs a nested extension.
std::vector<SingularPoint> singularPoints(const MultiPoly& f, long degreeCap = 8);

struct SingularityReport {
    AlgNumber ps, pt;
    std::vector<PuiseuxBranch> branches;
    long vDim = 0;       // (sum of [k(x̃):k(x)]) - 1
    bool unibranch = true;
};

SingularityReport analyzeSingularity(const MultiPoly& f, const AlgNumber& ps,
                                     const AlgNumber& pt, const PrecisionBudget& budget);

// Valuation bound N for the finite monomial battery: any monomial s^i t^j
// with i·val(S) + j·val(T) > N is guaranteed to kill the residue on this
// branch. Negative N means the empty battery (vacuous membership).
long membershipBound(const GeneralizedFraction& cls, const Chain& chain,
                     const PrecisionBudget& budget);

struct MonomialResidue {
    std::size_t branchIndex;
    long i, j;  // monomial s^i t^j
    ResidueValue rv;
};

struct MembershipReport {
    std::vector<MonomialResidue> entries;
    long monomialBound = -1;  // max over branches
    bool inL = true;
};

// Theorem-6.6-style test at one singular point: residues of the class times
// every monomial within the bound, on every branch.
MembershipReport testMembership(const GeneralizedFraction& cls,
                                const SingularityReport& report,
                                const PrecisionBudget& budget);

struct FundamentalClassReport {
    MembershipReport dsComponent;  // [ds∧df/f] = [f_t ds∧dt/f]
    MembershipReport dtComponent;  // [dt∧df/f] = [-f_s ds∧dt/f]
    bool allZero = true;
};

FundamentalClassReport fundamentalClassCheck(const MultiPoly& f,
                                             const SingularityReport& report,
                                             const PrecisionBudget& budget);

}  // namespace parshin
