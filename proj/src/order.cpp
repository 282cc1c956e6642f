#include "endoatlas/order.hpp"

#include <algorithm>
#include <sstream>

#include "endoatlas/errors.hpp"

namespace endoatlas {

namespace {

Rat trace_pairing(const Quaternion& x, const Quaternion& y) { return (x * y.conj()).trd(); }

bool coords_integral(const std::vector<Rat>& v) {
    for (const Rat& q : v)
        if (!is_integer(q)) return false;
    return true;
}

bool odd_denominators(const RatMatrix& M) {
    for (const Rat& q : M.a)
        if (mpz_even_p(q.get_den_mpz_t())) return false;
    return true;
}

}  // namespace

Quaternion QuatOrder::basis_element(std::size_t s) const {
    return {alg, basis.at(s, 0), basis.at(s, 1), basis.at(s, 2), basis.at(s, 3)};
}

Quaternion QuatOrder::element_from_coords(const std::vector<Rat>& coords) const {
    std::vector<Rat> v = row_times(coords, basis);
    return {alg, v[0], v[1], v[2], v[3]};
}

std::vector<Rat> QuatOrder::rational_coords(const Quaternion& q) const {
    return row_times({q.a, q.b, q.c, q.d}, basis_inv);
}

bool QuatOrder::contains(const Quaternion& q) const {
    return coords_integral(rational_coords(q));
}

OrderCheck is_order(const QuatAlgebra& A, const RatMatrix& basis) {
    if (basis.rows != 4 || basis.cols != 4) throw singular_basis("basis must be 4x4");
    if (basis.det() == 0) throw singular_basis();
    RatMatrix inv = basis.inverse();
    auto member = [&](const Quaternion& q) {
        return coords_integral(row_times({q.a, q.b, q.c, q.d}, inv));
    };
    auto elt = [&](std::size_t s) {
        return Quaternion(A, basis.at(s, 0), basis.at(s, 1), basis.at(s, 2), basis.at(s, 3));
    };

    if (!member(Quaternion::unit(A))) return {false, "1 is not in the lattice"};
    for (std::size_t s = 0; s < 4; ++s) {
        Quaternion e = elt(s);
        if (!is_integer(e.trd())) return {false, e.str() + " has trd = " + e.trd().get_str()};
        if (!is_integer(e.nrd())) return {false, e.str() + " has nrd = " + e.nrd().get_str()};
    }
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t) {
            Quaternion prod = elt(s) * elt(t);
            if (!member(prod))
                return {false, "(" + elt(s).str() + ")*(" + elt(t).str() + ") = " + prod.str() +
                                   " escapes the lattice"};
        }
    return {true, ""};
}

QuatOrder make_order(const QuatAlgebra& A, const RatMatrix& basis, std::string name) {
    OrderCheck chk = is_order(A, basis);
    if (!chk.ok) throw not_an_order("not an order: " + chk.witness);
    QuatOrder O{A, basis, basis.inverse(), IntMatrix(4, 4), std::move(name)};
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = 0; t < 4; ++t) {
            Rat g = trace_pairing(O.basis_element(s), O.basis_element(t));
            if (!is_integer(g)) throw not_an_order("trace pairing not integral");
            O.gram.at(s, t) = rat_num(g);
        }
    return O;
}

namespace {

RatMatrix rows_to_matrix(const std::vector<std::vector<Rat>>& rows) {
    RatMatrix M(rows.size(), 4);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) M.at(i, j) = rows[i][j];
    return M;
}

const Rat H(1, 2);  // one half

}  // namespace

std::vector<QuatOrder> lemma_order(const Int& D, const Int& m) {
    QuatAlgebra A(D, m);
    const Int m4 = mod_floor(m, 4), D4 = mod_floor(D, 4);
    std::vector<QuatOrder> out;
    if (D % 2 == 0 && m4 == 3) {
        // Z + (1+j+k)/2 Z + (1+j-k)/2 Z + (i+k)/2 Z
        out.push_back(make_order(A,
                                 rows_to_matrix({{1, 0, 0, 0},
                                                 {H, 0, H, H},
                                                 {H, 0, H, -H},
                                                 {0, H, 0, H}}),
                                 "O"));
    } else if (m4 == 1) {
        // Z + (1+j)/2 Z + k Z + (i+k)/2 Z
        out.push_back(make_order(A,
                                 rows_to_matrix({{1, 0, 0, 0},
                                                 {H, 0, H, 0},
                                                 {0, 0, 0, 1},
                                                 {0, H, 0, H}}),
                                 "O"));
        if (D4 == 1) {
            // Z + (1+i)/2 Z + j Z + (j+k)/2 Z
            out.push_back(make_order(A,
                                     rows_to_matrix({{1, 0, 0, 0},
                                                     {H, H, 0, 0},
                                                     {0, 0, 1, 0},
                                                     {0, 0, H, H}}),
                                     "O1"));
        } else if (D4 == 3) {
            // Z + (1+k)/2 Z + j Z + (i+j)/2 Z
            out.push_back(make_order(A,
                                     rows_to_matrix({{1, 0, 0, 0},
                                                     {H, 0, 0, H},
                                                     {0, 0, 1, 0},
                                                     {0, H, H, 0}}),
                                     "O3"));
        }
    } else {
        std::ostringstream os;
        os << "no closed-form order for D = " << D.get_str() << ", m = " << m.get_str()
           << " (need 2|D with m = 3 mod 4, or m = 1 mod 4)";
        throw congruence_out_of_scope(os.str());
    }
    for (const QuatOrder& O : out) {
        DiscInfo di = reduced_discriminant(O);
        if (di.disc != D) throw error("closed-form order has wrong reduced discriminant");
    }
    return out;
}

DiscInfo reduced_discriminant(const QuatOrder& O) {
    HnfResult h = hnf_and_det(O.gram);
    Int det = abs(h.det);
    auto r = perfect_sqrt(det);
    if (!r) throw non_square_gram_determinant("Gram determinant " + det.get_str() + " is not a square");
    return {*r, is_squarefree(*r)};
}

std::vector<Quaternion> half_integral_closure(const Int& D, const Int& m) {
    if (m % 2 == 0) throw congruence_out_of_scope("half-integral enumeration requires m odd");
    QuatAlgebra A(D, m);
    std::vector<Quaternion> out;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c)
                for (int d = 0; d <= 1; ++d) {
                    if (!a && !b && !c && !d) continue;
                    Quaternion q(A, Rat(a) * H, Rat(b) * H, Rat(c) * H, Rat(d) * H);
                    if (is_integer(q.trd()) && is_integer(q.nrd())) out.push_back(q);
                }
    return out;
}

bool equal_at_2(const QuatOrder& O1, const QuatOrder& O2) {
    if (!(O1.alg == O2.alg)) throw algebra_mismatch();
    RatMatrix C = O1.basis * O2.basis_inv;
    RatMatrix Cinv = O2.basis * O1.basis_inv;
    return odd_denominators(C) && odd_denominators(Cinv);
}

ConjAction conjugation_matrix(const QuatOrder& O, const Quaternion& q) {
    Quaternion qinv = q.inverse();
    ConjAction act;
    act.mat = IntMatrix(4, 4);
    for (std::size_t s = 0; s < 4; ++s) {
        Quaternion image = q * O.basis_element(s) * qinv;
        std::vector<Rat> coords = O.rational_coords(image);
        if (!coords_integral(coords)) throw does_not_normalize(O.basis_element(s).str());
        for (std::size_t t = 0; t < 4; ++t) act.mat.at(t, s) = rat_num(coords[t]);
    }
    act.mat_mod2 = act.mat.reduced_mod(2);
    act.identity_mod2 = act.mat_mod2.is_identity();
    return act;
}

std::vector<TwistedOrder> twist_search(const QuatOrder& O, const Quaternion& mu) {
    const Int& D = O.alg.D;
    if (!O.contains(mu)) throw bad_polarization("mu does not lie in the order");
    if (mu.trd() != 0) throw bad_polarization("mu must have trace zero");
    Quaternion musq = mu * mu;
    if (!(musq == Quaternion(O.alg, Rat(-D), 0, 0, 0)))
        throw bad_polarization("mu^2 + D must vanish");

    // sublattice {x in O : trd(x) = 0, mu x + x mu = 0} via an integer kernel
    RatMatrix A(4, 5);
    for (std::size_t s = 0; s < 4; ++s) {
        Quaternion e = O.basis_element(s);
        Quaternion anti = mu * e + e * mu;
        A.at(s, 0) = e.trd();
        A.at(s, 1) = anti.a;
        A.at(s, 2) = anti.b;
        A.at(s, 3) = anti.c;
        A.at(s, 4) = anti.d;
    }
    Int den = A.common_denominator();
    IntMatrix B(4, 9);  // [den*A | I], kernel read off HNF rows with zero left block
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t j = 0; j < 5; ++j) B.at(s, j) = rat_num(A.at(s, j) * Rat(den));
        B.at(s, 5 + s) = 1;
    }
    IntMatrix R = hnf_rows(B);
    std::vector<std::vector<Int>> kernel;
    for (std::size_t i = 0; i < R.rows; ++i) {
        bool zero_left = true;
        for (std::size_t j = 0; j < 5; ++j)
            if (R.at(i, j) != 0) { zero_left = false; break; }
        if (!zero_left) continue;
        kernel.push_back({R.at(i, 5), R.at(i, 6), R.at(i, 7), R.at(i, 8)});
    }
    if (kernel.size() != 2) throw error("anticommutant sublattice does not have rank 2");

    auto from_coeffs = [&](const Int& s, const Int& t) {
        std::vector<Rat> coords(4);
        for (std::size_t j = 0; j < 4; ++j) coords[j] = Rat(s * kernel[0][j] + t * kernel[1][j]);
        return O.element_from_coords(coords);
    };

    // positive definite binary form Q(s,t) = -nrd(s v1 + t v2)
    Quaternion v1 = from_coeffs(1, 0), v2 = from_coeffs(0, 1);
    Rat q11 = -v1.nrd(), q22 = -v2.nrd();
    Rat q12 = (-(v1 + v2).nrd() + v1.nrd() + v2.nrd()) / 2;
    Rat det2 = q11 * q22 - q12 * q12;
    if (q11 <= 0 || det2 <= 0) throw error("norm form on the anticommutant is not positive definite");

    // value <= D forces s^2 <= D q22/det, t^2 <= D q11/det
    auto bound = [&](const Rat& qd) -> Int {
        Rat r = Rat(D) * qd / det2;
        Int num = rat_num(r), d2 = rat_den(r);
        Int lim;
        mpz_sqrt(lim.get_mpz_t(), Int(num / d2 + 1).get_mpz_t());
        return lim + 1;
    };
    Int smax = bound(q22), tmax = bound(q11);

    std::vector<TwistedOrder> found;
    for (Int s = 0; s <= smax; ++s)
        for (Int t = -tmax; t <= tmax; ++t) {
            if (s == 0 && t <= 0) continue;  // enumerate one of each +-pair
            Quaternion chi = from_coeffs(s, t);
            // sign convention for the reported representative: first nonzero
            // coordinate positive
            for (const Rat* coord : {&chi.b, &chi.c, &chi.d}) {
                if (*coord == 0) continue;
                if (*coord < 0) chi = -chi;
                break;
            }
            Rat val = -chi.nrd();
            if (!is_integer(val)) continue;
            Int v = rat_num(val);
            if (v <= 0 || v > D || D % v != 0) continue;
            try {
                conjugation_matrix(O, chi);  // normalizer membership
            } catch (const does_not_normalize&) {
                continue;
            }
            found.push_back({O, mu, chi, v});
        }
    std::sort(found.begin(), found.end(), [](const TwistedOrder& a, const TwistedOrder& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.chi.str() < b.chi.str();
    });
    return found;
}

QmVerdict qm_endo_verdict(const Int& D, const Int& m) {
    QuatAlgebra A(D, m);
    const Int m4 = mod_floor(m, 4);
    QmVerdict v;
    v.D = D;
    v.m = m;
    std::vector<QuatOrder> orders = lemma_order(D, m);  // throws congruence_out_of_scope

    Quaternion mu = Quaternion::gen_k(A);
    Quaternion chi = Quaternion::gen_j(A);
    Quaternion muchi = mu * chi;  // = m i

    for (const QuatOrder& O : orders) {
        ConjAction a_mu = conjugation_matrix(O, mu);
        ConjAction a_chi = conjugation_matrix(O, chi);
        ConjAction a_muchi = conjugation_matrix(O, muchi);
        OrderActionSummary s;
        s.order_name = O.name;
        s.mu_trivial_mod2 = a_mu.identity_mod2;
        s.chi_trivial_mod2 = a_chi.identity_mod2;
        s.muchi_trivial_mod2 = a_muchi.identity_mod2;
        s.faithful_mod2 = !a_mu.identity_mod2 && !a_chi.identity_mod2 && !a_muchi.identity_mod2 &&
                          !(a_mu.mat_mod2 == a_chi.mat_mod2) && !(a_mu.mat_mod2 == a_muchi.mat_mod2) &&
                          !(a_chi.mat_mod2 == a_muchi.mat_mod2);
        v.actions.push_back(s);
    }

    if (D % 2 == 0 && m4 == 3) {
        v.case_tag = "2|D, m = 3 mod 4";
        for (const OrderActionSummary& s : v.actions)
            if (!s.faithful_mod2) throw error("expected faithful mod-2 action for 2|D, m = 3 mod 4");
        v.verdict = "L_contained_in_2_torsion_field";
    } else {
        v.case_tag = "m = 1 mod 4";
        v.verdict = "endo_subfield_candidates";
        if (D % 2 == 0) {
            v.candidate_d = {Int(-D), Int(D / m)};
        } else {
            v.candidate_d = {m, Int(-D), Int(D / m)};
        }
    }
    return v;
}

}  // namespace endoatlas
