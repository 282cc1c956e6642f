#ifndef ENDOATLAS_NUMFIELD_HPP
#define ENDOATLAS_NUMFIELD_HPP

#include <utility>
#include <vector>

#include "endoatlas/poly.hpp"

namespace endoatlas {

struct Dedekind2 {
    bool two_maximal = false;
    // mod-2 factorization shape: (degree, multiplicity) pairs, sorted
    std::vector<std::pair<long, long>> shape;
};

// Dedekind's criterion at p = 2 for the equation order Z[x]/(g), g monic
// with integer coefficients. Throws not_monic.
Dedekind2 dedekind_2maximal(const UniPoly& g);

// g irreducible over F_2 (degree pattern {deg g})
bool inert_at_2(const UniPoly& g);

}  // namespace endoatlas

#endif
