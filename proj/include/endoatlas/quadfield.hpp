#ifndef ENDOATLAS_QUADFIELD_HPP
#define ENDOATLAS_QUADFIELD_HPP

#include <string>
#include <vector>

#include "endoatlas/bigint.hpp"

namespace endoatlas {

// Q(sqrt(d)) for squarefree d != 0, 1, with its fundamental discriminant.
struct QuadField {
    Int d;
    Int disc;  // d when d = 1 mod 4, else 4d

    explicit QuadField(const Int& d_);
    std::string str() const;
};

enum class SplitType2 { ramified_wild, inert, split };

struct Splitting2 {
    SplitType2 type;
    std::vector<Int> residue_sizes;   // 2^f for each prime above 2
    std::vector<Int> residue_orders;  // 2^f - 1
};

// Behaviour of 2 in Q(sqrt(d)): split iff d = 1 mod 8, inert iff d = 5 mod 8,
// else ramified (always wild: e = 2 = residue characteristic).
Splitting2 quad_splitting_at_2(const QuadField& F);

const char* split_type_name(SplitType2 t);

// Class number of Q(sqrt(d)), d < 0 squarefree, by exhaustive enumeration of
// reduced primitive forms (a,b,c) of the fundamental discriminant:
// |b| <= a <= c, b^2 - 4ac = disc, gcd(a,b,c) = 1, b >= 0 when |b| = a or a = c.
Int class_number_imag(const Int& d);

}  // namespace endoatlas

#endif
