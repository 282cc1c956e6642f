#include "endoatlas/quadfield.hpp"

#include "endoatlas/errors.hpp"

namespace endoatlas {

QuadField::QuadField(const Int& d_) : d(d_) {
    if (d == 0 || d == 1) throw error("d must not be 0 or 1");
    if (!is_squarefree(d)) throw not_squarefree("d must be squarefree");
    disc = (mod_floor(d, 4) == 1) ? d : Int(4 * d);
}

std::string QuadField::str() const { return "Q(sqrt(" + d.get_str() + "))"; }

Splitting2 quad_splitting_at_2(const QuadField& F) {
    Splitting2 out{};
    const Int r = mod_floor(F.d, 8);
    if (r == 1) {
        out.type = SplitType2::split;
        out.residue_sizes = {Int(2), Int(2)};
        out.residue_orders = {Int(1), Int(1)};
    } else if (r == 5) {
        out.type = SplitType2::inert;
        out.residue_sizes = {Int(4)};
        out.residue_orders = {Int(3)};
    } else {
        out.type = SplitType2::ramified_wild;
        out.residue_sizes = {Int(2)};
        out.residue_orders = {Int(1)};
    }
    return out;
}

const char* split_type_name(SplitType2 t) {
    switch (t) {
        case SplitType2::ramified_wild: return "ramified-wild";
        case SplitType2::inert: return "inert";
        case SplitType2::split: return "split";
    }
    return "?";
}

Int class_number_imag(const Int& d) {
    if (d >= 0) throw not_imaginary();
    if (!is_squarefree(d)) throw not_squarefree();
    const Int disc = QuadField(d).disc;  // negative
    Int count = 0;
    // |b| <= a <= c and b^2 - 4ac = disc < 0 give 3b^2 <= |disc|
    Int bmax;
    mpz_sqrt(bmax.get_mpz_t(), Int(abs(disc) / 3).get_mpz_t());
    for (Int b = -bmax; b <= bmax; ++b) {
        if (mod_floor(b - disc, 2) != 0) continue;
        Int num = b * b - disc;
        if (num % 4 != 0) continue;
        Int ac = num / 4;
        for (Int a = (abs(b) > 1 ? abs(b) : Int(1)); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            Int c = ac / a;
            if (abs(b) > a || a > c) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            if ((abs(b) == a || a == c) && b < 0) continue;  // boundary convention
            ++count;
        }
    }
    return count;
}

}  // namespace endoatlas
