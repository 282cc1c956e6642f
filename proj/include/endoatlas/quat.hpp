#ifndef ENDOATLAS_QUAT_HPP
#define ENDOATLAS_QUAT_HPP

#include <string>
#include <vector>

#include "endoatlas/bigint.hpp"

namespace endoatlas {

// Hilbert symbol (a, b)_p for nonzero integers, p = 2 or an odd prime.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);

// Rational quaternion algebra with i^2 = D/m, j^2 = m, k = ij, so k^2 = -D.
// Construction validates that the presentation really has discriminant D:
// the primes where the Hilbert symbol (D/m, m)_p is -1 must multiply to D.
struct QuatAlgebra {
    Int D;     // positive squarefree
    Int m;     // positive divisor of D
    Int i_sq;  // D/m
    Int j_sq;  // m

    QuatAlgebra(const Int& D_, const Int& m_);

    // ramified primes of the presentation (D/m, m), no validation
    static std::vector<Int> ramified_primes(const Int& D, const Int& m);

    bool operator==(const QuatAlgebra& o) const { return D == o.D && m == o.m; }
};

struct Quaternion {
    QuatAlgebra alg;
    Rat a, b, c, d;  // coordinates in the basis 1, i, j, k

    Quaternion(const QuatAlgebra& alg_, Rat a_, Rat b_, Rat c_, Rat d_)
        : alg(alg_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Quaternion unit(const QuatAlgebra& A) { return {A, 1, 0, 0, 0}; }
    static Quaternion gen_i(const QuatAlgebra& A) { return {A, 0, 1, 0, 0}; }
    static Quaternion gen_j(const QuatAlgebra& A) { return {A, 0, 0, 1, 0}; }
    static Quaternion gen_k(const QuatAlgebra& A) { return {A, 0, 0, 0, 1}; }

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion scaled(const Rat& s) const;
    bool operator==(const Quaternion& o) const;

    Quaternion conj() const { return {alg, a, -b, -c, -d}; }
    Rat trd() const { return 2 * a; }
    Rat nrd() const;
    Quaternion inverse() const;  // throws division_by_zero_norm
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    std::string str() const;
};

}  // namespace endoatlas

#endif
