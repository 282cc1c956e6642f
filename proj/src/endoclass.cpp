#include "endoatlas/endoclass.hpp"

#include <sstream>

#include "endoatlas/cyclo.hpp"
#include "endoatlas/errors.hpp"
#include "endoatlas/numfield.hpp"
#include "endoatlas/quadfield.hpp"

namespace endoatlas {

const char* containment_name(Containment c) {
    switch (c) {
        case Containment::contained: return "contained";
        case Containment::not_determined: return "not-determined";
        case Containment::hypothesis_fails: return "hypothesis-fails";
    }
    return "?";
}

namespace {

std::string quad_display(const Int& d) { return "Q(sqrt(" + d.get_str() + "))"; }

CandidateAlgebra candidate_from_subfield(const CycloSubfield& sf, const Int& p) {
    CandidateAlgebra c;
    c.degree = sf.degree;
    c.defining_poly = sf.period_poly;
    c.branch = "subfield";
    if (sf.degree == 1) {
        c.display = "Z";
    } else if (sf.degree == 2) {
        // quadratic subfield of Q(zeta_p) is Q(sqrt(p*)), p* = (-1)^((p-1)/2) p
        Int d = (mod_floor(p, 4) == 1) ? p : Int(-p);
        c.quad_d = d;
        c.display = quad_display(d);
    } else {
        std::ostringstream os;
        os << "degree-" << sf.degree << " subfield of Q(zeta_" << p.get_str() << ")";
        c.display = os.str();
    }
    return c;
}

}  // namespace

EndoReport classify_cp(long g, std::optional<Int> base_d) {
    if (g < 1) throw malformed_descriptor("dimension g must be positive");
    const Int p(2 * g + 1);
    if (!is_prime(p)) throw not_prime("2g+1 = " + p.get_str() + " is not prime");

    EndoReport rep;
    {
        std::ostringstream os;
        os << "g = " << g << ", p = " << p.get_str() << ", base = "
           << (base_d ? "Q(sqrt(" + base_d->get_str() + "))" : "Q");
        rep.input_summary = os.str();
    }
    rep.status = "ok";

    bool cm_branch = false;
    if (!base_d) {
        cm_branch = (mod_floor(p, 4) == 3) && g >= 3;
    } else {
        if (g < 2) throw malformed_descriptor("imaginary-quadratic base requires g >= 2");
        QuadField K(*base_d);
        if (K.d >= 0) throw not_imaginary("base field must be imaginary quadratic");
        Int h = class_number_imag(K.d);
        Splitting2 sp = quad_splitting_at_2(K);
        {
            VerdictLine l;
            l.statement = "residue fields above 2 in K have multiplicative orders coprime to p";
            l.rule = "CP_RESIDUE_ORDER_CHECK";
            std::ostringstream orders;
            for (std::size_t i = 0; i < sp.residue_orders.size(); ++i)
                orders << (i ? "," : "") << sp.residue_orders[i].get_str();
            l.data.emplace_back("splitting_of_2", split_type_name(sp.type));
            l.data.emplace_back("residue_orders", orders.str());
            l.data.emplace_back("note",
                                "orders 2^f - 1 with f <= 2 are 1 or 3, never divisible by p >= 5");
            rep.lines.push_back(l);
        }
        if (h % p == 0) {
            rep.status = "hypothesis-failure";
            rep.failed_hypothesis = "class number of K divisible by p";
            VerdictLine l;
            l.statement = "class number h(K) = " + h.get_str() + " is divisible by p = " +
                          p.get_str() + "; the finiteness statement does not apply";
            l.rule = "CP_CLASS_NUMBER_HYPOTHESIS";
            l.data.emplace_back("class_number", h.get_str());
            l.data.emplace_back("caveat",
                                "the hypothesis is sharp: a quintic whose splitting field is the "
                                "Hilbert class field of K gives a C5 2-torsion extension with "
                                "real-quadratic endomorphisms");
            rep.lines.push_back(l);
            return rep;
        }
        VerdictLine l;
        l.statement = "class number h(K) = " + h.get_str() + " is coprime to p = " + p.get_str();
        l.rule = "CP_CLASS_NUMBER_HYPOTHESIS";
        l.data.emplace_back("class_number", h.get_str());
        rep.lines.push_back(l);
        cm_branch = (mod_floor(p, 4) == 3);
    }

    for (const CycloSubfield& sf : cyclotomic_subfields(p)) {
        if (sf.degree == static_cast<long>(p.get_si()) - 1) continue;  // proper subfields only
        rep.candidates.push_back(candidate_from_subfield(sf, p));
    }
    {
        VerdictLine l;
        l.statement =
            "End0(A) is a proper subfield of Q(zeta_" + p.get_str() + ")" +
            (cm_branch ? " unless A is isogenous to a power of a CM elliptic curve" : "");
        l.rule = "CP_SUBFIELD_DICHOTOMY";
        rep.lines.push_back(l);
    }
    if (cm_branch) {
        CandidateAlgebra c;
        c.degree = 2;
        c.quad_d = Int(-p);
        c.display = quad_display(Int(-p));
        c.branch = "cm-power";
        rep.candidates.push_back(c);
        VerdictLine l;
        l.statement = "possible branch: A isogenous over the algebraic closure to the power of "
                      "an elliptic curve with CM by " + quad_display(Int(-p));
        l.rule = "CP_CM_POWER_BRANCH";
        l.data.emplace_back("condition", base_d ? "p = 3 mod 4" : "p = 3 mod 4 and g >= 3");
        l.data.emplace_back("note", "listed, never excluded: deciding isogeny to a power is out of scope");
        rep.lines.push_back(l);
    }
    if (!base_d && g == 1) {
        VerdictLine l;
        l.statement = "the only candidate is End(A) = Z: no complex multiplication is possible";
        l.rule = "CP_NO_CM_DIM1";
        rep.lines.push_back(l);
    }
    return rep;
}

EndoReport classify_quintic_jacobian(const QuinticJobInput& in) {
    QuinticLabel lab = quintic_galois(in.f, in.budget, in.seed);
    EndoReport rep;
    rep.status = "ok";
    {
        std::ostringstream os;
        os << "f = " << in.f.str() << ", K = "
           << (in.base_quad_d ? "Q(sqrt(" + in.base_quad_d->get_str() + "))" : "Q");
        rep.input_summary = os.str();
    }
    {
        VerdictLine l;
        l.statement = std::string("Gal(f) = ") + group_name(lab.group);
        l.rule = "QUINTIC_GALOIS_LABEL";
        l.exact = lab.cert.exact;
        l.data.emplace_back("disc", lab.cert.disc.get_str());
        l.data.emplace_back("disc_square", lab.cert.disc_square ? "true" : "false");
        l.data.emplace_back("irreducibility", lab.cert.irreducibility);
        l.data.emplace_back("exclusion", lab.cert.exclusion);
        rep.lines.push_back(l);
    }

    const Int disc_part = squarefree_part(lab.cert.disc);
    switch (lab.group) {
        case QuinticGroup::F5: {
            {
                VerdictLine l;
                l.statement = "if End0(J) is a real quadratic field, then L = K(sqrt(Delta_f)) = "
                              "K(sqrt(" + disc_part.get_str() + ")), the unique quadratic "
                              "subextension of K(f)";
                l.rule = "F5_REAL_QUADRATIC_ENDOS";
                l.exact = lab.cert.exact;
                l.data.emplace_back("disc_squarefree_part", disc_part.get_str());
                rep.lines.push_back(l);
            }
            {
                VerdictLine l;
                l.statement = "if End0(J) = E is a degree-4 CM field, then E is cyclic and "
                              "L = EK is the unique degree-4 subextension of K(f)";
                l.rule = "F5_CM_QUARTIC_ENDOS";
                l.exact = lab.cert.exact;
                rep.lines.push_back(l);
            }
            if (in.cm_quartic) {
                QuarticLabel ql = quartic_galois(*in.cm_quartic);
                VerdictLine l;
                l.statement = std::string("candidate CM field has Galois group ") +
                              group_name(ql.group) +
                              (ql.group == QuarticGroup::C4
                                   ? ": cyclic, as required; L = EK"
                                   : ": NOT cyclic, inconsistent with the F5 + CM case");
                l.rule = "F5_CM_QUARTIC_CYCLIC_CHECK";
                l.data.emplace_back("quartic", in.cm_quartic->str());
                l.data.emplace_back("quartic_group", group_name(ql.group));
                rep.lines.push_back(l);

                ContainmentReport cr =
                    endo_field_containment({*in.cm_quartic, /*maximal_order=*/false,
                                            /*galois_asserted=*/false});
                VerdictLine cl;
                cl.statement = std::string("2-torsion containment test on the candidate: ") +
                               containment_name(cr.verdict);
                cl.rule = "ENDO_FIELD_CONTAINMENT";
                if (!cr.failing_hypothesis.empty())
                    cl.data.emplace_back("failing_hypothesis", cr.failing_hypothesis);
                cl.data.emplace_back("inert_at_2", inert_at_2(*in.cm_quartic) ? "true" : "false");
                rep.lines.push_back(cl);
            }
            break;
        }
        case QuinticGroup::D5: {
            VerdictLine l;
            l.statement = "if End0(J) is a degree-4 CM field, then L is the unique quadratic "
                          "subextension of K(f)";
            l.rule = "D5_CM_QUARTIC_ENDOS";
            l.exact = lab.cert.exact;
            rep.lines.push_back(l);
            break;
        }
        case QuinticGroup::C5: {
            {
                VerdictLine l;
                l.statement = "L = K: every endomorphism is defined over the base field";
                l.rule = "C5_ENDOS_BASE_FIELD";
                l.exact = lab.cert.exact;
                rep.lines.push_back(l);
            }
            VerdictLine l;
            l.rule = "C5_CM_REAL_QUAD_CONDITION";
            l.exact = lab.cert.exact;
            if (!in.base_quad_d) {
                l.statement = "if End0(J) were a degree-4 CM field, K would contain a real "
                              "quadratic field with discriminant 5 mod 8; K = Q contains none, "
                              "so the CM branch is excluded over Q";
            } else {
                QuadField K(*in.base_quad_d);
                bool cond = K.d > 0 && mod_floor(K.disc, 8) == 5;
                l.statement = std::string("necessary condition for a degree-4 CM End0(J): K "
                                          "contains a real quadratic field with discriminant 5 "
                                          "mod 8 -- ") +
                              (cond ? "satisfied by K itself" : "not witnessed by K itself");
                l.data.emplace_back("disc_K", K.disc.get_str());
            }
            rep.lines.push_back(l);
            break;
        }
        case QuinticGroup::A5:
        case QuinticGroup::S5: {
            VerdictLine l;
            l.statement = std::string("no endomorphism-field statement applies to Gal(f) = ") +
                          group_name(lab.group);
            l.rule = "QUINTIC_NO_APPLICABLE_CASE";
            l.exact = lab.cert.exact;
            rep.lines.push_back(l);
            break;
        }
    }

    if (in.endo_quad_d) {
        QuadField E(*in.endo_quad_d);
        bool cond = E.d > 0 && mod_floor(E.disc, 8) == 5;
        VerdictLine l;
        l.statement = "candidate real quadratic End0(J) = " + E.str() +
                      ": necessary condition disc = 5 mod 8 is " +
                      (cond ? "satisfied" : "violated");
        l.rule = "REAL_QUAD_DISC_5_MOD_8";
        l.data.emplace_back("disc", E.disc.get_str());
        l.data.emplace_back("disc_mod_8", mod_floor(E.disc, 8).get_str());
        rep.lines.push_back(l);
    }

    if (!in.base_quad_d && in.cm_quartic && lab.group != QuinticGroup::F5) {
        VerdictLine l;
        l.statement = "over K = Q, a CM jacobian with an order-5 element in Gal(f) forces "
                      "Gal(f) = F5; the computed label contradicts the CM hypothesis";
        l.rule = "Q_CM_FORCES_F5";
        l.exact = lab.cert.exact;
        rep.lines.push_back(l);
    }
    return rep;
}

ContainmentReport endo_field_containment(const EndoFieldInput& in) {
    const UniPoly& g = in.poly;
    if (g.is_zero() || !g.integer_coeffs() || g.lc() != 1)
        throw malformed_descriptor("defining polynomial must be monic with integer coefficients");
    const int deg = g.degree();
    ContainmentReport rep;

    auto line = [&](std::string stmt, std::string rule,
                    std::vector<std::pair<std::string, std::string>> data = {}) {
        rep.lines.push_back({std::move(stmt), std::move(rule), true, std::move(data)});
    };

    if (deg < 1) throw malformed_descriptor("defining polynomial must be nonconstant");
    if (deg == 1) {
        rep.verdict = Containment::contained;
        line("E = Q: trivially Galois, 2-maximal and unramified; L lies in K(A[2])",
             "CONTAINMENT_TRIVIAL");
        return rep;
    }

    // hypothesis 1: E/Q Galois
    bool galois_exact = false;
    if (deg == 2) {
        galois_exact = true;
        line("quadratic fields are Galois over Q", "CONTAINMENT_GALOIS");
    } else if (deg == 3) {
        Rat disc = poly_disc(g);
        if (rat_sqrt(disc)) {
            galois_exact = true;
            line("cubic with square discriminant: Galois with group C3", "CONTAINMENT_GALOIS",
                 {{"disc", disc.get_str()}});
        } else {
            rep.verdict = Containment::hypothesis_fails;
            rep.failing_hypothesis = "non-Galois";
            line("cubic with non-square discriminant is not Galois", "CONTAINMENT_GALOIS",
                 {{"disc", disc.get_str()}});
            return rep;
        }
    } else if (deg == 4) {
        QuarticLabel ql = quartic_galois(g);
        if (ql.group == QuarticGroup::C4 || ql.group == QuarticGroup::V4) {
            galois_exact = true;
            line(std::string("quartic field with group ") + group_name(ql.group) +
                     " is abelian, hence Galois",
                 "CONTAINMENT_GALOIS", {{"quartic_group", group_name(ql.group)}});
        } else {
            rep.verdict = Containment::hypothesis_fails;
            rep.failing_hypothesis = "non-Galois";
            line(std::string("quartic field with group ") + group_name(ql.group) +
                     " is not Galois over Q",
                 "CONTAINMENT_GALOIS", {{"quartic_group", group_name(ql.group)}});
            return rep;
        }
    } else {
        if (!in.galois_asserted)
            throw malformed_descriptor(
                "Galois-ness cannot be certified above degree 4; pass the caller assertion");
        line("Galois-ness of E/Q accepted as a caller assertion (degree > 4)",
             "CONTAINMENT_GALOIS_ASSERTED");
    }

    // hypothesis 2: End(A) 2-maximal
    Dedekind2 ded = dedekind_2maximal(g);
    {
        std::ostringstream shape;
        for (std::size_t i = 0; i < ded.shape.size(); ++i)
            shape << (i ? "," : "") << ded.shape[i].first << ":" << ded.shape[i].second;
        line(std::string("Dedekind criterion at 2 on the equation order: ") +
                 (ded.two_maximal ? "2-maximal" : "not 2-maximal"),
             "CONTAINMENT_2MAXIMAL", {{"mod2_shape", shape.str()}});
    }
    bool two_maximal_known;
    if (in.maximal_order) {
        two_maximal_known = true;
        line("endomorphism ring is the maximal order, hence 2-maximal", "CONTAINMENT_2MAXIMAL");
    } else {
        two_maximal_known = ded.two_maximal;
        if (!ded.two_maximal) {
            rep.verdict = Containment::hypothesis_fails;
            rep.failing_hypothesis = "not 2-maximal";
            return rep;
        }
    }

    // hypothesis 3: 2 not wildly ramified in E
    bool wild_known_false = false;
    if (deg == 2) {
        Int d = squarefree_part(rat_num(poly_disc(g)));
        Splitting2 sp = quad_splitting_at_2(QuadField(d));
        line(std::string("2 is ") + split_type_name(sp.type) + " in Q(sqrt(" + d.get_str() + "))",
             "CONTAINMENT_WILD", {{"d", d.get_str()}});
        if (sp.type == SplitType2::ramified_wild) {
            rep.verdict = Containment::hypothesis_fails;
            rep.failing_hypothesis = "2 wildly ramified";
            return rep;
        }
        wild_known_false = true;
    } else if (ded.two_maximal) {
        // equation order 2-maximal: the mod-2 shape is the splitting of 2,
        // multiplicities are ramification indices
        bool any_even_e = false, all_unramified = true;
        for (const auto& [fdeg, mult] : ded.shape) {
            (void)fdeg;
            if (mult > 1) all_unramified = false;
            if (mult % 2 == 0 && mult > 1) any_even_e = true;
        }
        if (any_even_e) {
            rep.verdict = Containment::hypothesis_fails;
            rep.failing_hypothesis = "2 wildly ramified";
            line("a prime above 2 has even ramification index: wild", "CONTAINMENT_WILD");
            return rep;
        }
        wild_known_false = true;
        line(all_unramified ? "2 is unramified in E" : "2 ramifies with odd indices only: tame",
             "CONTAINMENT_WILD");
    } else {
        line("equation order is not 2-maximal, so the mod-2 shape does not certify "
             "ramification; wildness at 2 not determined",
             "CONTAINMENT_WILD");
    }

    if (galois_exact || in.galois_asserted) {
        if (two_maximal_known && wild_known_false) {
            rep.verdict = Containment::contained;
            line("E/Q Galois, End(A) 2-maximal, 2 not wildly ramified: L lies in K(A[2])",
                 "CONTAINMENT_CONCLUSION");
        } else {
            rep.verdict = Containment::not_determined;
        }
    }
    return rep;
}

Int quadratic_splitting_d(const UniPoly& f) {
    if (f.is_zero()) throw malformed_descriptor("zero polynomial");
    UniPoly g = f.primitive_integer();
    for (const Rat& r : rational_roots(f)) {
        UniPoly q, rem;
        UniPoly::divmod(g, UniPoly(std::vector<Rat>{-r, Rat(1)}), q, rem);
        if (!rem.is_zero()) throw error("root division failed");
        g = q;
    }
    if (g.degree() <= 0) return Int(1);
    if (g.degree() != 2)
        throw malformed_descriptor("splitting field is not quadratic over the rationals");
    Rat disc = poly_disc(g);
    // the squarefree part of num/den agrees with that of num*den
    return squarefree_part(rat_num(disc) * rat_den(disc));
}

}  // namespace endoatlas
