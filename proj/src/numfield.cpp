#include "endoatlas/numfield.hpp"

#include <algorithm>

#include "endoatlas/errors.hpp"
#include "endoatlas/modpoly.hpp"

namespace endoatlas {

namespace {

// lift to an integer polynomial with coefficients in {0,1}
UniPoly lift_mod2(const ModPoly& f) {
    std::vector<Rat> v;
    v.reserve(f.c.size());
    for (const Int& x : f.c) v.emplace_back(x);
    return UniPoly(std::move(v));
}

}  // namespace

Dedekind2 dedekind_2maximal(const UniPoly& g) {
    if (g.is_zero() || !g.integer_coeffs() || g.lc() != 1) throw not_monic();
    const Int two(2);
    ModPoly gbar = ModPoly::reduce(g, two);
    auto factors = factor_mod_p(gbar);

    Dedekind2 out;
    for (const auto& [irr, mult] : factors) out.shape.emplace_back(irr.degree(), mult);
    std::sort(out.shape.begin(), out.shape.end());

    // g1 = product of distinct irreducible factors, h = g / g1 (mod 2), both lifted
    ModPoly g1bar = ModPoly::one(two), hbar = ModPoly::one(two);
    for (const auto& [irr, mult] : factors) {
        g1bar = g1bar * irr;
        for (long e = 1; e < mult; ++e) hbar = hbar * irr;
    }
    UniPoly g1 = lift_mod2(g1bar), h = lift_mod2(hbar);
    // obstruction T = (g - g1*h) / 2, an integer polynomial
    UniPoly diff = g - g1 * h;
    UniPoly T = diff.scaled(Rat(1, 2));
    if (!T.integer_coeffs()) throw error("Dedekind obstruction is not 2-integral");

    ModPoly Tbar = ModPoly::reduce(T, two);
    ModPoly u = ModPoly::gcd(ModPoly::gcd(Tbar, g1bar), hbar);
    out.two_maximal = u.is_one() || u.is_zero();
    return out;
}

bool inert_at_2(const UniPoly& g) {
    if (g.is_zero() || !g.integer_coeffs() || g.lc() != 1) throw not_monic();
    ModPoly gbar = ModPoly::reduce(g, Int(2));
    if (gbar.degree() != g.degree()) return false;
    return is_irreducible_mod_p(gbar);
}

}  // namespace endoatlas
