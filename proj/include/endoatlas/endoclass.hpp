#ifndef ENDOATLAS_ENDOCLASS_HPP
#define ENDOATLAS_ENDOCLASS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endoatlas/galois.hpp"
#include "endoatlas/poly.hpp"

namespace endoatlas {

// One auditable statement in a report. `rule` names the decision-table entry
// that produced it; `exact` is false when Monte-Carlo evidence is involved.
struct VerdictLine {
    std::string statement;
    std::string rule;
    bool exact = true;
    std::vector<std::pair<std::string, std::string>> data;
};

struct CandidateAlgebra {
    std::string display;  // e.g. "Z", "Q(sqrt(5))", "degree-3 subfield of Q(zeta_7)"
    long degree = 1;
    std::optional<Int> quad_d;        // set for quadratic fields
    std::optional<UniPoly> defining_poly;
    std::string branch;  // "subfield" or "cm-power"
};

struct EndoReport {
    std::string input_summary;
    std::string status;             // "ok" or "hypothesis-failure"
    std::string failed_hypothesis;  // set when status != ok
    std::vector<VerdictLine> lines;
    std::vector<CandidateAlgebra> candidates;
};

// Possible endomorphism algebras of a g-dimensional abelian variety whose
// 2-torsion field is cyclic of prime degree p = 2g+1 over the base: over Q,
// or over an imaginary quadratic field Q(sqrt(base_d)) with class number
// coprime to p (otherwise a hypothesis-failure report).
EndoReport classify_cp(long g, std::optional<Int> base_d);

struct QuinticJobInput {
    UniPoly f;
    std::optional<Int> base_quad_d;    // base field K = Q(sqrt(d)); Q when absent
    std::optional<UniPoly> cm_quartic; // candidate degree-4 CM endomorphism field
    std::optional<Int> endo_quad_d;    // candidate real quadratic endomorphism field
    long budget = 200;
    unsigned long seed = 0;
};

// Endomorphism-field statements for the jacobian of y^2 = f(x), deg f = 5,
// keyed on the Galois group of f.
EndoReport classify_quintic_jacobian(const QuinticJobInput& in);

enum class Containment { contained, not_determined, hypothesis_fails };
const char* containment_name(Containment c);

struct EndoFieldInput {
    UniPoly poly;               // monic integer defining polynomial of E
    bool maximal_order = false; // endomorphism ring is the maximal order (else equation order)
    bool galois_asserted = false;  // caller assertion, needed above degree 4
};

struct ContainmentReport {
    Containment verdict = Containment::not_determined;
    std::string failing_hypothesis;  // "non-Galois" | "not 2-maximal" | "2 wildly ramified"
    std::vector<VerdictLine> lines;
};

// Does L lie inside K(A[2])? Certified only when E/Q Galois, End(A) 2-maximal
// and 2 not wildly ramified are all established exactly.
ContainmentReport endo_field_containment(const EndoFieldInput& in);

// Squarefree d with Q(sqrt(d)) the splitting field of f, for an f that
// splits into rational roots and at most one irreducible quadratic
// (d = 1 when f splits completely over Q).
Int quadratic_splitting_d(const UniPoly& f);

}  // namespace endoatlas

#endif
