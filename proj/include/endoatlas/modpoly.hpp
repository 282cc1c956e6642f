#ifndef ENDOATLAS_MODPOLY_HPP
#define ENDOATLAS_MODPOLY_HPP

#include <utility>
#include <vector>

#include "endoatlas/bigint.hpp"
#include "endoatlas/poly.hpp"

namespace endoatlas {

// Monic-friendly polynomial arithmetic over F_p, little-endian coefficients
// in [0, p). Small utility layer; degrees here never exceed a few dozen.
struct ModPoly {
    Int p;
    std::vector<Int> c;

    ModPoly() : p(2) {}
    ModPoly(Int prime, std::vector<Int> coeffs);
    static ModPoly reduce(const UniPoly& f, const Int& p);  // throws bad_prime if a denominator vanishes mod p
    static ModPoly x(const Int& p);
    static ModPoly one(const Int& p);

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }

    ModPoly monic() const;
    ModPoly derivative() const;
    static void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
    static ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& mod);
    static ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& mod);
    static ModPoly gcd(ModPoly a, ModPoly b);  // monic

    std::string str() const;
};

// Degrees (with multiplicity one each, as a sorted multiset) of the
// irreducible factors of f mod p, via distinct-degree splitting.
// Preconditions: f has integer coefficients, p prime not dividing lc(f),
// f squarefree mod p. Throws bad_prime / not_squarefree_mod_p.
std::vector<long> factor_degrees_mod_p(const UniPoly& f, const Int& p);

// Full factorization over F_p into monic irreducibles with multiplicities.
// Deterministic (trial division by enumerated irreducibles); meant for the
// small p / small degree needs of the Dedekind criterion, so p is capped.
std::vector<std::pair<ModPoly, long>> factor_mod_p(const ModPoly& f);

bool is_irreducible_mod_p(const ModPoly& f);

}  // namespace endoatlas

#endif
