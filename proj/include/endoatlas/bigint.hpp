#ifndef ENDOATLAS_BIGINT_HPP
#define ENDOATLAS_BIGINT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "endoatlas/errors.hpp"

namespace endoatlas {

// All exact paths run on GMP integers and rationals. Rationals constructed
// through make_rat are always canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// floor-mod into [0, m)
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// exact nonnegative square root, or empty when n is not a perfect square
inline std::optional<Int> perfect_sqrt(const Int& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// exact nonnegative square root of a rational, or empty
inline std::optional<Rat> rat_sqrt(const Rat& q) {
    auto n = perfect_sqrt(rat_num(q));
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(rat_den(q));
    if (!d) return std::nullopt;
    return make_rat(*n, *d);
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline Int next_prime(const Int& n) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

// Legendre symbol (a|p), p an odd prime
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// p-adic valuation of n != 0 together with the cofactor u = n / p^v
inline long valuation(const Int& n, const Int& p, Int& unit) {
    long v = 0;
    unit = n;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), unit.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        unit = q;
        ++v;
    }
    return v;
}

// distinct prime factors of |n| by trial division
inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    Int m = abs(n), p = 2;
    while (p * p <= m) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    return true;
}

// n = squarefree_part(n) * square; sign of n is kept on the squarefree part
inline Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int m = abs(n), p = 2, out = 1;
    while (p * p <= m) {
        if (m % p == 0) {
            long v = 0;
            while (m % p == 0) { m /= p; ++v; }
            if (v % 2 == 1) out *= p;
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    out *= m;  // leftover prime
    return sgn(n) < 0 ? Int(-out) : out;
}

}  // namespace endoatlas

#endif
