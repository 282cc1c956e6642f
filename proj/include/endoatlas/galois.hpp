#ifndef ENDOATLAS_GALOIS_HPP
#define ENDOATLAS_GALOIS_HPP

#include <string>
#include <vector>

#include "endoatlas/poly.hpp"

namespace endoatlas {

enum class QuinticGroup { C5, D5, F5, A5, S5 };
enum class QuarticGroup { C4, V4, D4, A4, S4 };

const char* group_name(QuinticGroup g);
const char* group_name(QuarticGroup g);

struct CycleTypeObs {
    std::vector<long> type;  // sorted factor-degree multiset, sums to 5
    Int first_prime;
    long count = 0;
};

struct QuinticCertificate {
    Int disc;
    bool disc_square = false;
    std::vector<CycleTypeObs> observed;  // sorted by type
    long budget = 0;
    unsigned long seed = 0;
    long usable_primes = 0;
    Int monic_scale;           // 1 when the input was already monic
    std::string irreducibility;  // how irreducibility was certified, or "assumed"
    std::string exclusion;       // one-sided exclusion note backing the label
    bool exact = false;          // confidence: exact vs monte-carlo
};

struct QuinticLabel {
    QuinticGroup group;
    QuinticCertificate cert;
};

// Classify Gal(f) for a squarefree quintic with rational coefficients.
// Non-monic input is normalized by the standard monic substitution first.
// Cycle types are sampled at `budget` usable primes chosen deterministically
// from `seed` (primes dividing lc or disc are skipped).
QuinticLabel quintic_galois(const UniPoly& f, long budget = 200, unsigned long seed = 0);

struct QuarticCertificate {
    Int disc;
    bool disc_square = false;
    UniPoly resolvent_cubic;
    std::vector<Rat> resolvent_roots;  // rational roots of the resolvent
    Int monic_scale;
    bool lower_split = false;   // x^2 - beta x + d splits over Q(sqrt(disc))
    bool upper_split = false;   // x^2 + a x + (b - beta) splits over Q(sqrt(disc))
};

struct QuarticLabel {
    QuarticGroup group;
    QuarticCertificate cert;
};

// Resolvent-cubic classification of an irreducible quartic; all tests are
// exact rational square checks. Throws not_quartic / reducible_polynomial.
QuarticLabel quartic_galois(const UniPoly& g);

}  // namespace endoatlas

#endif
