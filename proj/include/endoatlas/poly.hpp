#ifndef ENDOATLAS_POLY_HPP
#define ENDOATLAS_POLY_HPP

#include <string>
#include <vector>

#include "endoatlas/bigint.hpp"

namespace endoatlas {

// Univariate polynomial with exact rational coefficients, little-endian
// (coefficient of x^k at index k). Always trimmed: the leading coefficient
// is nonzero unless the polynomial is zero.
struct UniPoly {
    std::vector<Rat> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly from_ints(const std::vector<long>& coeffs);
    static UniPoly from_int_vec(const std::vector<Int>& coeffs);
    static UniPoly x_power(std::size_t k);

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lc() const { return c.back(); }
    Rat coeff(std::size_t k) const { return k < c.size() ? c[k] : Rat(0); }

    bool integer_coeffs() const;

    Rat eval(const Rat& t) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }

    UniPoly derivative() const;
    UniPoly monic() const;

    // quotient and remainder over Q; divisor must be nonzero
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // monic gcd over Q
    static UniPoly gcd(UniPoly a, UniPoly b);

    // clears denominators and divides by integer content; keeps the sign
    UniPoly primitive_integer() const;
    // for integer f with lc a: returns monic a^(n-1) f(x/a), setting scale = a
    UniPoly monicized(Int& scale) const;

    std::string str() const;  // human-readable, variable x
};

// resultant of two nonzero polynomials via the Sylvester matrix
Rat resultant(const UniPoly& f, const UniPoly& g);

// discriminant: (-1)^(n(n-1)/2) res(f, f') / lc(f); requires deg f >= 2
Rat poly_disc(const UniPoly& f);

// all rational roots with multiplicity (divisor search on an integer model)
std::vector<Rat> rational_roots(const UniPoly& f);

}  // namespace endoatlas

#endif
