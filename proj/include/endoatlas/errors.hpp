#ifndef ENDOATLAS_ERRORS_HPP
#define ENDOATLAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace endoatlas {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// exactmath
struct singular_matrix : error {
    explicit singular_matrix(const std::string& w = "matrix is rank deficient") : error(w) {}
};
struct degree_too_small : error {
    explicit degree_too_small(const std::string& w = "polynomial degree too small") : error(w) {}
};
struct not_squarefree_mod_p : error {
    explicit not_squarefree_mod_p(const std::string& w = "polynomial not squarefree mod p") : error(w) {}
};
struct bad_prime : error {
    explicit bad_prime(const std::string& w = "invalid prime for this operation") : error(w) {}
};

// quatorder
struct presentation_mismatch : error {
    explicit presentation_mismatch(const std::string& w) : error(w) {}
};
struct division_by_zero_norm : error {
    explicit division_by_zero_norm(const std::string& w = "quaternion has reduced norm zero") : error(w) {}
};
struct congruence_out_of_scope : error {
    explicit congruence_out_of_scope(const std::string& w) : error(w) {}
};
struct singular_basis : error {
    explicit singular_basis(const std::string& w = "lattice basis is singular") : error(w) {}
};
struct not_an_order : error {
    explicit not_an_order(const std::string& w) : error(w) {}
};
struct non_square_gram_determinant : error {
    explicit non_square_gram_determinant(const std::string& w) : error(w) {}
};
struct algebra_mismatch : error {
    explicit algebra_mismatch(const std::string& w = "operands live in different quaternion algebras") : error(w) {}
};
struct does_not_normalize : error {
    std::string witness;
    explicit does_not_normalize(const std::string& witness_elt)
        : error("element does not normalize the order; conjugate of " + witness_elt + " falls outside"),
          witness(witness_elt) {}
};
struct bad_polarization : error {
    explicit bad_polarization(const std::string& w) : error(w) {}
};

// numfield
struct not_imaginary : error {
    explicit not_imaginary(const std::string& w = "d must be negative") : error(w) {}
};
struct not_squarefree : error {
    explicit not_squarefree(const std::string& w = "integer must be squarefree") : error(w) {}
};
struct not_monic : error {
    explicit not_monic(const std::string& w = "polynomial must be monic") : error(w) {}
};
struct not_quintic : error {
    explicit not_quintic(const std::string& w = "polynomial must have degree 5") : error(w) {}
};
struct zero_discriminant : error {
    explicit zero_discriminant(const std::string& w = "polynomial is not squarefree") : error(w) {}
};
struct not_quartic : error {
    explicit not_quartic(const std::string& w = "polynomial must have degree 4") : error(w) {}
};
struct reducible_polynomial : error {
    explicit reducible_polynomial(const std::string& w) : error(w) {}
};
struct not_prime : error {
    explicit not_prime(const std::string& w = "argument must be prime") : error(w) {}
};
struct precision_bound_exceeded : error {
    explicit precision_bound_exceeded(const std::string& w) : error(w) {}
};

// endoclass / cli
struct malformed_descriptor : error {
    explicit malformed_descriptor(const std::string& w) : error(w) {}
};

}  // namespace endoatlas

#endif
