#include "endoatlas/modpoly.hpp"

#include <algorithm>
#include <sstream>

#include "endoatlas/errors.hpp"

namespace endoatlas {

ModPoly::ModPoly(Int prime, std::vector<Int> coeffs) : p(std::move(prime)), c(std::move(coeffs)) {
    for (Int& x : c) x = mod_floor(x, p);
    trim();
}

ModPoly ModPoly::reduce(const UniPoly& f, const Int& p) {
    std::vector<Int> v;
    v.reserve(f.c.size());
    for (const Rat& q : f.c) {
        Int den = mod_floor(rat_den(q), p);
        if (den == 0) throw bad_prime("denominator vanishes mod p");
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw bad_prime("denominator not invertible mod p");
        v.push_back(mod_floor(rat_num(q) * inv, p));
    }
    return ModPoly(p, std::move(v));
}

ModPoly ModPoly::x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }
ModPoly ModPoly::one(const Int& p) { return ModPoly(p, {Int(1)}); }

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Int> v(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return ModPoly(p, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Int> v(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] -= o.c[i];
    return ModPoly(p, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p, {});
    std::vector<Int> v(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    }
    return ModPoly(p, std::move(v));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    Int inv;
    mpz_invert(inv.get_mpz_t(), c.back().get_mpz_t(), p.get_mpz_t());
    std::vector<Int> v(c);
    for (Int& x : v) x = mod_floor(x * inv, p);
    return ModPoly(p, std::move(v));
}

ModPoly ModPoly::derivative() const {
    if (c.size() <= 1) return ModPoly(p, {});
    std::vector<Int> v(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = c[k] * Int(static_cast<long>(k));
    return ModPoly(p, std::move(v));
}

void ModPoly::divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw error("ModPoly division by zero");
    const Int& p = a.p;
    Int binv;
    mpz_invert(binv.get_mpz_t(), b.c.back().get_mpz_t(), p.get_mpz_t());
    std::vector<Int> rv(a.c);
    std::vector<Int> qv;
    if (a.degree() >= b.degree()) qv.assign(a.degree() - b.degree() + 1, Int(0));
    int rdeg = a.degree();
    auto trim_deg = [&]() {
        while (rdeg >= 0 && mod_floor(rv[rdeg], p) == 0) --rdeg;
    };
    trim_deg();
    while (rdeg >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rdeg - b.degree());
        Int f = mod_floor(rv[rdeg] * binv, p);
        qv[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rv[i + shift] = mod_floor(rv[i + shift] - f * b.c[i], p);
        trim_deg();
    }
    rv.resize(rdeg + 1);
    q = ModPoly(p, std::move(qv));
    r = ModPoly(p, std::move(rv));
}

ModPoly ModPoly::mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& mod) {
    ModPoly prod = a * b, q, r;
    divmod(prod, mod, q, r);
    return r;
}

ModPoly ModPoly::powmod(const ModPoly& base, const Int& e, const ModPoly& mod) {
    ModPoly result = ModPoly::one(base.p), acc = base;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mulmod(result, acc, mod);
        k >>= 1;
        if (k > 0) acc = mulmod(acc, acc, mod);
    }
    return result;
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::string ModPoly::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || c[k] != 1) os << c[k].get_str();
        if (k > 0) {
            if (c[k] != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<long> factor_degrees_mod_p(const UniPoly& f, const Int& p) {
    if (!is_prime(p)) throw bad_prime("p is not prime");
    if (!f.integer_coeffs()) throw bad_prime("polynomial must have integer coefficients");
    if (mod_floor(rat_num(f.lc()), p) == 0) throw bad_prime("p divides the leading coefficient");
    ModPoly g = ModPoly::reduce(f, p).monic();
    if (!ModPoly::gcd(g, g.derivative()).is_one())
        throw not_squarefree_mod_p();
    std::vector<long> degrees;
    ModPoly h = ModPoly::x(p);  // x^(p^d) mod g, built incrementally
    long d = 0;
    while (g.degree() > 0 && 2 * (d + 1) <= g.degree()) {
        ++d;
        h = ModPoly::powmod(h, p, g);
        ModPoly split = ModPoly::gcd(g, h - ModPoly::x(p));
        if (split.degree() > 0) {
            long count = split.degree() / d;
            for (long i = 0; i < count; ++i) degrees.push_back(d);
            ModPoly q, r;
            ModPoly::divmod(g, split, q, r);
            g = q.monic();
            ModPoly qq, rr;
            ModPoly::divmod(h, g, qq, rr);
            h = rr;
        }
    }
    if (g.degree() > 0) degrees.push_back(g.degree());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

namespace {

// monic irreducibles over F_p of the given degree, lexicographic order
std::vector<ModPoly> irreducibles_of_degree(const Int& p, long deg, long plong) {
    std::vector<ModPoly> out;
    std::vector<Int> coeffs(deg + 1, Int(0));
    coeffs[deg] = 1;
    // odometer over the deg free coefficients
    std::vector<long> idx(deg, 0);
    while (true) {
        for (long i = 0; i < deg; ++i) coeffs[i] = idx[i];
        ModPoly cand(p, coeffs);
        if (cand.degree() == static_cast<int>(deg) && is_irreducible_mod_p(cand)) out.push_back(cand);
        long pos = 0;
        while (pos < deg) {
            if (++idx[pos] < plong) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == deg) break;
    }
    return out;
}

}  // namespace

bool is_irreducible_mod_p(const ModPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    ModPoly g = f.monic();
    // x^(p^n) == x mod g and gcd(x^(p^(n/q)) - x, g) = 1 for prime q | n
    const long n = g.degree();
    ModPoly xp = ModPoly::x(g.p);
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), g.p.get_mpz_t(), n);
    if (!(ModPoly::powmod(xp, pn, g) == xp)) return false;
    for (const Int& q : prime_factors(Int(n))) {
        long nq = n / q.get_si();
        Int pnq;
        mpz_pow_ui(pnq.get_mpz_t(), g.p.get_mpz_t(), nq);
        ModPoly t = ModPoly::powmod(xp, pnq, g) - xp;
        if (!ModPoly::gcd(t, g).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<ModPoly, long>> factor_mod_p(const ModPoly& f) {
    if (f.p > 64) throw bad_prime("full factorization is only provided for small p");
    const long plong = static_cast<long>(f.p.get_si());
    std::vector<std::pair<ModPoly, long>> out;
    ModPoly g = f.monic();
    for (long deg = 1; g.degree() > 0 && deg <= g.degree(); ++deg) {
        if (2 * deg > g.degree()) break;
        for (const ModPoly& irr : irreducibles_of_degree(f.p, deg, plong)) {
            long mult = 0;
            while (true) {
                ModPoly q, r;
                ModPoly::divmod(g, irr, q, r);
                if (!r.is_zero()) break;
                g = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(irr, mult);
            if (g.degree() < deg) break;
        }
    }
    if (g.degree() > 0) out.emplace_back(g, 1);
    return out;
}

}  // namespace endoatlas
