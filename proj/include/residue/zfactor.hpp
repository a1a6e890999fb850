#pragma once

#include <vector>

#include "residue/rational.hpp"
#include "residue/upoly.hpp"

namespace parshin {

struct QFactorization {
    Rational unit;  // input = unit * prod(factors[i]^mult[i]); factors monic irreducible
    std::vector<std::pair<UPoly<Rational>, long>> factors;
};

// Complete factorization over Q: squarefree split (Yun), then Zassenhaus with
// a single large prime (no Hensel lifting needed at desk-scale degrees).
QFactorization factorOverQ(const UPoly<Rational>& p);

bool isIrreducibleOverQ(const UPoly<Rational>& p);

// Roots in Q, with multiplicity.
std::vector<std::pair<Rational, long>> rationalRoots(const UPoly<Rational>& p);

}  // namespace parshin
