#ifndef ENDOATLAS_ORDER_HPP
#define ENDOATLAS_ORDER_HPP

#include <string>
#include <vector>

#include "endoatlas/matrix.hpp"
#include "endoatlas/quat.hpp"

namespace endoatlas {

// Rank-4 lattice in a quaternion algebra that has been validated as an
// order: contains 1, closed under multiplication, integral trd and nrd on
// the basis. `gram` holds trd(e_s * conj(e_t)).
struct QuatOrder {
    QuatAlgebra alg;
    RatMatrix basis;      // rows = coordinates of basis elements in 1,i,j,k
    RatMatrix basis_inv;
    IntMatrix gram;
    std::string name;

    Quaternion basis_element(std::size_t s) const;
    Quaternion element_from_coords(const std::vector<Rat>& coords) const;
    std::vector<Rat> rational_coords(const Quaternion& q) const;
    bool contains(const Quaternion& q) const;
};

struct OrderCheck {
    bool ok = false;
    std::string witness;  // violating element or product when !ok
};

// Order axioms for a candidate basis; throws singular_basis on rank deficiency.
OrderCheck is_order(const QuatAlgebra& A, const RatMatrix& basis);

// Validating constructor; throws not_an_order carrying the witness.
QuatOrder make_order(const QuatAlgebra& A, const RatMatrix& basis, std::string name = "");

// The closed-form orders of discriminant D available for the congruence
// classes (2|D, m = 3 mod 4) and (m = 1 mod 4); one order, or the 2-adic
// pair when D is odd. Throws congruence_out_of_scope otherwise.
std::vector<QuatOrder> lemma_order(const Int& D, const Int& m);

struct DiscInfo {
    Int disc;        // positive square root of |det gram|
    bool hereditary; // disc squarefree
};
DiscInfo reduced_discriminant(const QuatOrder& O);

// The integral elements among the 15 candidates (a+bi+cj+dk)/2 with
// a,b,c,d in {0,1}, not all zero; requires m odd.
std::vector<Quaternion> half_integral_closure(const Int& D, const Int& m);

// True when the two orders agree after tensoring with Z_2: the change of
// basis and its inverse both have odd denominators.
bool equal_at_2(const QuatOrder& O1, const QuatOrder& O2);

struct ConjAction {
    IntMatrix mat;       // column s = coordinates of q e_s q^{-1} in O's basis
    IntMatrix mat_mod2;
    bool identity_mod2 = false;
};

// Matrix of x -> q x q^{-1} on O's basis; q must normalize O.
// Throws does_not_normalize (with the violating basis element) otherwise.
ConjAction conjugation_matrix(const QuatOrder& O, const Quaternion& q);

struct TwistedOrder {
    QuatOrder order;
    Quaternion mu;
    Quaternion chi;
    Int norm;  // -nrd(chi), a positive divisor of D
};

// All twists chi of (O, mu): trace zero, in O, normalizing O, anticommuting
// with mu, with -nrd(chi) a positive divisor of D; deduplicated up to sign.
std::vector<TwistedOrder> twist_search(const QuatOrder& O, const Quaternion& mu);

struct OrderActionSummary {
    std::string order_name;
    bool mu_trivial_mod2 = false;
    bool chi_trivial_mod2 = false;
    bool muchi_trivial_mod2 = false;
    bool faithful_mod2 = false;  // images of mu, chi, mu*chi all distinct and non-identity
};

struct QmVerdict {
    Int D, m;
    std::string case_tag;          // congruence class that applied
    std::string verdict;           // "L_contained_in_2_torsion_field" or "endo_subfield_candidates"
    std::vector<Int> candidate_d;  // quadratic fields Q(sqrt(d)) for the m=1 mod 4 case
    std::vector<OrderActionSummary> actions;
};

// Endomorphism-field verdict for abelian surfaces with quaternionic
// multiplication by (O, mu, chi) of discriminant D and norm m, normalized
// as mu = k, chi = j.
QmVerdict qm_endo_verdict(const Int& D, const Int& m);

}  // namespace endoatlas

#endif
