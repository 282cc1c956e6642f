#include "endoatlas/cyclo.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "endoatlas/errors.hpp"

namespace endoatlas {

namespace {

long smallest_primitive_root(long p) {
    std::vector<long> qdiv;
    for (const Int& q : prime_factors(Int(p - 1))) qdiv.push_back(q.get_si());
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qdiv) {
            Int t;
            mpz_powm_ui(t.get_mpz_t(), Int(g).get_mpz_t(), (p - 1) / q, Int(p).get_mpz_t());
            if (t == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw error("no primitive root found");
}

// complex arithmetic on mpfr pairs, enough for products of linear factors
struct CVec {
    std::vector<mpfr_t> re, im;
    mpfr_prec_t prec;

    explicit CVec(std::size_t n, mpfr_prec_t pr) : re(n), im(n), prec(pr) {
        for (std::size_t i = 0; i < n; ++i) {
            mpfr_init2(re[i], prec);
            mpfr_init2(im[i], prec);
            mpfr_set_zero(re[i], 1);
            mpfr_set_zero(im[i], 1);
        }
    }
    ~CVec() {
        for (std::size_t i = 0; i < re.size(); ++i) {
            mpfr_clear(re[i]);
            mpfr_clear(im[i]);
        }
    }
    CVec(const CVec&) = delete;
    CVec& operator=(const CVec&) = delete;
};

// exact verification data: an element of multiplicative order p in F_q
struct PeriodModQ {
    Int q;
    std::vector<Int> period;  // one residue per coset
};

PeriodModQ periods_mod_q(const Int& q, long p, long g, long e, long f) {
    PeriodModQ out;
    out.q = q;
    Int u = 2, w;
    while (true) {
        mpz_powm(w.get_mpz_t(), u.get_mpz_t(), Int((q - 1) / p).get_mpz_t(), q.get_mpz_t());
        if (w != 1) break;
        ++u;
    }
    // w has order exactly p
    for (long t = 0; t < e; ++t) {
        Int sum = 0;
        Int coset;
        mpz_powm_ui(coset.get_mpz_t(), Int(g).get_mpz_t(), t, Int(p).get_mpz_t());
        for (long i = 0; i < f; ++i) {
            Int h;
            mpz_powm_ui(h.get_mpz_t(), Int(g).get_mpz_t(), e * i, Int(p).get_mpz_t());
            Int expo = mod_floor(coset * h, p);
            Int term;
            mpz_powm(term.get_mpz_t(), w.get_mpz_t(), expo.get_mpz_t(), q.get_mpz_t());
            sum = mod_floor(sum + term, q);
        }
        out.period.push_back(sum);
    }
    return out;
}

}  // namespace

std::vector<CycloSubfield> cyclotomic_subfields(const Int& p_in) {
    if (!is_prime(p_in) || p_in == 2) throw not_prime("p must be an odd prime");
    if (p_in > 2000)
        throw precision_bound_exceeded("p exceeds the precision policy bound of 2000");
    const long p = p_in.get_si();
    const long g = smallest_primitive_root(p);

    std::vector<long> divisors;
    for (long e = 1; e <= p - 1; ++e)
        if ((p - 1) % e == 0) divisors.push_back(e);

    // verification primes q = 1 mod p
    std::vector<Int> qs;
    for (Int q = p_in + 1; qs.size() < 2; q += p_in)
        if (is_prime(q)) qs.push_back(q);

    std::vector<CycloSubfield> out;
    for (long e : divisors) {
        const long f = (p - 1) / e;
        // |coeff| <= binom(e,k) f^k <= (1+f)^e; generous slack for rounding drift
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>(
            (static_cast<double>(e) * std::max(1.0, std::log2(static_cast<double>(f) + 1.0))) * 1.3 +
            2.0 * std::log2(static_cast<double>(p) + 1.0) + 96.0);

        // the p-th roots of unity we need: zeta^k = exp(2 pi i k / p)
        mpfr_t two_pi, angle, tmp;
        mpfr_init2(two_pi, prec);
        mpfr_init2(angle, prec);
        mpfr_init2(tmp, prec);
        mpfr_const_pi(two_pi, MPFR_RNDN);
        mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);

        // periods eta_t = sum over the coset g^t * H
        CVec eta(e, prec);
        for (long t = 0; t < e; ++t) {
            Int coset;
            mpz_powm_ui(coset.get_mpz_t(), Int(g).get_mpz_t(), t, Int(p).get_mpz_t());
            for (long i = 0; i < f; ++i) {
                Int h;
                mpz_powm_ui(h.get_mpz_t(), Int(g).get_mpz_t(), e * i, Int(p).get_mpz_t());
                long expo = mod_floor(coset * h, p).get_si();
                mpfr_mul_si(angle, two_pi, expo, MPFR_RNDN);
                mpfr_div_ui(angle, angle, p, MPFR_RNDN);
                mpfr_cos(tmp, angle, MPFR_RNDN);
                mpfr_add(eta.re[t], eta.re[t], tmp, MPFR_RNDN);
                mpfr_sin(tmp, angle, MPFR_RNDN);
                mpfr_add(eta.im[t], eta.im[t], tmp, MPFR_RNDN);
            }
        }

        // product of (x - eta_t), coefficients little-endian
        CVec coef(e + 1, prec);
        mpfr_set_ui(coef.re[0], 1, MPFR_RNDN);
        long deg = 0;
        mpfr_t nr, ni;
        mpfr_init2(nr, prec);
        mpfr_init2(ni, prec);
        for (long t = 0; t < e; ++t) {
            for (long k = deg + 1; k >= 0; --k) {
                // new[k] = (k ? old[k-1] : 0) - eta_t * old[k]
                mpfr_mul(nr, coef.re[k], eta.re[t], MPFR_RNDN);
                mpfr_mul(tmp, coef.im[k], eta.im[t], MPFR_RNDN);
                mpfr_sub(nr, nr, tmp, MPFR_RNDN);
                mpfr_mul(ni, coef.re[k], eta.im[t], MPFR_RNDN);
                mpfr_mul(tmp, coef.im[k], eta.re[t], MPFR_RNDN);
                mpfr_add(ni, ni, tmp, MPFR_RNDN);
                if (k > 0) {
                    mpfr_sub(coef.re[k], coef.re[k - 1], nr, MPFR_RNDN);
                    mpfr_sub(coef.im[k], coef.im[k - 1], ni, MPFR_RNDN);
                } else {
                    mpfr_neg(coef.re[0], nr, MPFR_RNDN);
                    mpfr_neg(coef.im[0], ni, MPFR_RNDN);
                }
            }
            ++deg;
        }
        mpfr_clear(nr);
        mpfr_clear(ni);

        // round to integers; residual real error and imaginary parts must be tiny
        std::vector<Rat> coeffs(e + 1);
        bool ok = true;
        for (long k = 0; k <= e && ok; ++k) {
            Int z;
            mpfr_t rounded;
            mpfr_init2(rounded, prec);
            mpfr_round(rounded, coef.re[k]);
            mpfr_get_z(z.get_mpz_t(), rounded, MPFR_RNDN);
            mpfr_sub(tmp, coef.re[k], rounded, MPFR_RNDN);
            mpfr_abs(tmp, tmp, MPFR_RNDN);
            if (mpfr_cmp_d(tmp, 0.25) >= 0) ok = false;
            mpfr_abs(rounded, coef.im[k], MPFR_RNDN);
            if (mpfr_cmp_d(rounded, 0.25) >= 0) ok = false;
            mpfr_clear(rounded);
            coeffs[k] = Rat(z);
        }
        mpfr_clear(two_pi);
        mpfr_clear(angle);
        mpfr_clear(tmp);
        if (!ok)
            throw precision_bound_exceeded("rounding residual too large for p = " + p_in.get_str());

        UniPoly P(coeffs);
        if (P.degree() != e || P.lc() != 1)
            throw precision_bound_exceeded("period polynomial lost its shape in rounding");

        // exact recheck: P(eta) = 0 in F_q for every period residue, two primes q
        for (const Int& q : qs) {
            PeriodModQ pm = periods_mod_q(q, p, g, e, f);
            for (const Int& eta_q : pm.period) {
                Int acc = 0;
                for (long k = e; k >= 0; --k) acc = mod_floor(acc * eta_q + rat_num(P.coeff(k)), q);
                if (acc != 0)
                    throw precision_bound_exceeded(
                        "period polynomial failed exact verification mod q = " + q.get_str());
            }
        }
        out.push_back({p_in, e, f, P});
    }
    return out;
}

}  // namespace endoatlas
