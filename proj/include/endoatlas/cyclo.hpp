#ifndef ENDOATLAS_CYCLO_HPP
#define ENDOATLAS_CYCLO_HPP

#include <vector>

#include "endoatlas/poly.hpp"

namespace endoatlas {

// Degree-e subfield of Q(zeta_p), one per divisor e of p-1, presented by the
// minimal polynomial of its Gaussian period (orbit sum of p-th roots of unity
// under the index-e subgroup of (Z/p)*).
struct CycloSubfield {
    Int p;
    long degree;        // e
    long period_order;  // f = (p-1)/e, the subgroup order; degree * period_order = p-1
    UniPoly period_poly;  // monic, integer coefficients, degree e
};

// All subfields of Q(zeta_p) for an odd prime p <= 2000, ascending degree.
// Coefficients are computed by high-precision floating evaluation, rounded
// to integers, then re-verified exactly against period sums in F_q for two
// primes q = 1 mod p. Throws not_prime / precision_bound_exceeded.
std::vector<CycloSubfield> cyclotomic_subfields(const Int& p);

}  // namespace endoatlas

#endif
