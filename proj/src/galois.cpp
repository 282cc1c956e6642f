#include "endoatlas/galois.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "endoatlas/errors.hpp"
#include "endoatlas/modpoly.hpp"

namespace endoatlas {

const char* group_name(QuinticGroup g) {
    switch (g) {
        case QuinticGroup::C5: return "C5";
        case QuinticGroup::D5: return "D5";
        case QuinticGroup::F5: return "F5";
        case QuinticGroup::A5: return "A5";
        case QuinticGroup::S5: return "S5";
    }
    return "?";
}

const char* group_name(QuarticGroup g) {
    switch (g) {
        case QuarticGroup::C4: return "C4";
        case QuarticGroup::V4: return "V4";
        case QuarticGroup::D4: return "D4";
        case QuarticGroup::A4: return "A4";
        case QuarticGroup::S4: return "S4";
    }
    return "?";
}

namespace {

bool int_is_square(const Int& n) { return n >= 0 && perfect_sqrt(n).has_value(); }

struct TypeTable {
    std::map<std::vector<long>, CycleTypeObs> seen;

    void add(const std::vector<long>& t, const Int& p) {
        auto it = seen.find(t);
        if (it == seen.end()) {
            seen.emplace(t, CycleTypeObs{t, p, 1});
        } else {
            ++it->second.count;
        }
    }
    bool has(const std::vector<long>& t) const { return seen.count(t) != 0; }
    std::vector<CycleTypeObs> sorted() const {
        std::vector<CycleTypeObs> v;
        for (const auto& [t, obs] : seen) v.push_back(obs);
        return v;
    }
};

}  // namespace

QuinticLabel quintic_galois(const UniPoly& f_in, long budget, unsigned long seed) {
    Int scale;
    UniPoly f = f_in.primitive_integer().monicized(scale);
    if (f.degree() != 5) throw not_quintic();

    QuinticCertificate cert;
    cert.budget = budget;
    cert.seed = seed;
    cert.monic_scale = scale;

    Rat disc_q = poly_disc(f);
    if (disc_q == 0) throw zero_discriminant();
    cert.disc = rat_num(disc_q);
    cert.disc_square = int_is_square(cert.disc);

    // deterministic prime walk starting at 101; skip primes dividing disc
    std::mt19937_64 rng(seed);
    TypeTable table;
    Int p = 101;
    long usable = 0;
    while (usable < budget) {
        if (cert.disc % p != 0) {
            table.add(factor_degrees_mod_p(f, p), p);
            ++usable;
        }
        long steps = 1 + static_cast<long>(rng() % 8);
        for (long i = 0; i < steps; ++i) p = next_prime(p);
    }
    cert.usable_primes = usable;
    cert.observed = table.sorted();

    const std::vector<long> t5{5}, t41{1, 4}, t221{1, 2, 2}, t311{1, 1, 3}, t32{2, 3},
        t2111{1, 1, 1, 2};
    if (table.has(t5))
        cert.irreducibility = "certified: irreducible mod p = " + table.seen.at(t5).first_prime.get_str();
    else if (table.has(t41))
        cert.irreducibility =
            "certified: 4-cycle mod p = " + table.seen.at(t41).first_prime.get_str();
    else
        cert.irreducibility = "assumed";

    QuinticGroup label;
    std::ostringstream note;
    if (cert.disc_square) {
        if (table.has(t41) || table.has(t32) || table.has(t2111))
            throw error("odd cycle type observed but discriminant is square; is f irreducible?");
        if (table.has(t311)) {
            label = QuinticGroup::A5;
            cert.exact = true;
            note << "square discriminant with a 3-cycle type forces A5";
        } else if (table.has(t221)) {
            label = QuinticGroup::D5;
            cert.exact = true;
            note << "square discriminant with an even involution; A5 excluded by absence of "
                    "3-cycle types among "
                 << usable << " usable primes (one-sided)";
        } else {
            label = QuinticGroup::C5;
            cert.exact = false;
            note << "square discriminant and only {1,1,1,1,1} or {5} types among " << usable
                 << " usable primes; D5 and A5 excluded one-sidedly";
        }
    } else {
        if (table.has(t311) || table.has(t32) || table.has(t2111)) {
            label = QuinticGroup::S5;
            cert.exact = true;
            note << "non-square discriminant with a type outside the order-20 group forces S5";
        } else if (table.has(t41)) {
            label = QuinticGroup::F5;
            cert.exact = true;
            note << "non-square discriminant with a 4-cycle; S5 excluded by absence of 3-cycle "
                    "and odd-involution types among "
                 << usable << " usable primes (one-sided)";
        } else {
            label = QuinticGroup::F5;
            cert.exact = false;
            note << "non-square discriminant, no 4-cycle observed among " << usable
                 << " usable primes; classification between F5 and S5 is one-sided";
        }
    }
    cert.exclusion = note.str();
    return {label, cert};
}

QuarticLabel quartic_galois(const UniPoly& g_in) {
    Int scale;
    UniPoly g = g_in.primitive_integer().monicized(scale);
    if (g.degree() != 4) throw not_quartic();

    std::vector<Rat> roots = rational_roots(g);
    if (!roots.empty()) {
        throw reducible_polynomial("quartic has rational root " + roots.front().get_str());
    }

    QuarticCertificate cert;
    cert.monic_scale = scale;
    Rat disc_q = poly_disc(g);
    if (disc_q == 0) throw reducible_polynomial("quartic has a repeated root");
    cert.disc = rat_num(disc_q);
    cert.disc_square = int_is_square(cert.disc);

    const Rat a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
    // resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2)
    cert.resolvent_cubic = UniPoly(
        std::vector<Rat>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rat(1)});
    cert.resolvent_roots = rational_roots(cert.resolvent_cubic);

    QuarticGroup label;
    switch (cert.resolvent_roots.size()) {
        case 3:
            label = QuarticGroup::V4;
            break;
        case 0:
            label = cert.disc_square ? QuarticGroup::A4 : QuarticGroup::S4;
            break;
        case 1: {
            const Rat& beta = cert.resolvent_roots.front();
            // splits over Q(sqrt(disc)) iff delta or delta*disc is a square
            auto splits = [&](const Rat& delta) {
                if (delta == 0) return true;
                return rat_sqrt(delta).has_value() || rat_sqrt(delta * disc_q).has_value();
            };
            cert.lower_split = splits(beta * beta - 4 * d);
            cert.upper_split = splits(a * a - 4 * (b - beta));
            label = (cert.lower_split && cert.upper_split) ? QuarticGroup::C4 : QuarticGroup::D4;
            break;
        }
        default:
            throw error("resolvent cubic has an impossible rational-root count");
    }
    return {label, cert};
}

}  // namespace endoatlas
