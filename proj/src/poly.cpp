#include "endoatlas/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "endoatlas/errors.hpp"
#include "endoatlas/matrix.hpp"

namespace endoatlas {

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_int_vec(const std::vector<Int>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (const Int& x : coeffs) v.emplace_back(x);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x_power(std::size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = 1;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool UniPoly::integer_coeffs() const {
    for (const Rat& q : c)
        if (!is_integer(q)) return false;
    return true;
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] -= o.c[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v(c);
    for (Rat& q : v) q = -q;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    std::vector<Rat> v(c);
    for (Rat& q : v) q *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (c.size() <= 1) return UniPoly();
    std::vector<Rat> v(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = c[k] * Rat(static_cast<long>(k));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lc());
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw error("polynomial division by zero");
    r = a;
    q = UniPoly();
    if (a.degree() < b.degree()) return;
    std::vector<Rat> qc(a.degree() - b.degree() + 1, Rat(0));
    Rat binv = 1 / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rat f = r.lc() * binv;
        qc[shift] = f;
        std::vector<Rat> rv(r.c);
        for (std::size_t i = 0; i < b.c.size(); ++i) rv[i + shift] -= f * b.c[i];
        r = UniPoly(std::move(rv));
    }
    q = UniPoly(std::move(qc));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::primitive_integer() const {
    if (is_zero()) return *this;
    Int den = 1;
    for (const Rat& q : c) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        den = d;
    }
    std::vector<Rat> v(c);
    for (Rat& q : v) q *= Rat(den);
    Int content = 0;
    for (const Rat& q : v) {
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), q.get_num_mpz_t());
        content = g;
    }
    if (content > 1)
        for (Rat& q : v) q /= Rat(content);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monicized(Int& scale) const {
    UniPoly f = primitive_integer();
    if (f.is_zero()) throw error("cannot monicize the zero polynomial");
    Int a = rat_num(f.lc());
    scale = a;
    if (a == 1) return f;
    // g(y) = a^(n-1) f(y/a): coefficient of y^k picks up a^(n-1-k)
    const std::size_t n = f.c.size() - 1;
    std::vector<Rat> v(f.c);
    Int pw = 1;
    for (std::size_t k = n; k-- > 0;) {
        pw *= a;  // a^(n-k)... built from the top down
        v[k] *= Rat(pw);
    }
    // v[n] stays a; divide everything by a to land on a monic integer polynomial
    for (Rat& q : v) q /= Rat(a);
    return UniPoly(std::move(v));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rat q = c[k];
        if (!first) {
            os << (sgn(q) < 0 ? " - " : " + ");
            q = abs(q);
        } else if (sgn(q) < 0) {
            os << "-";
            q = abs(q);
        }
        first = false;
        if (k == 0 || q != 1) os << q.get_str();
        if (k > 0) {
            if (q != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw error("resultant of the zero polynomial");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(g.degree());
    if (n == 0) {
        Rat r = 1;
        for (std::size_t i = 0; i < m; ++i) r *= f.c[0];
        return r;
    }
    if (m == 0) {
        Rat r = 1;
        for (std::size_t i = 0; i < n; ++i) r *= g.c[0];
        return r;
    }
    RatMatrix S(n + m, n + m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) S.at(r, r + n - k) = f.c[k];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) S.at(m + r, r + m - k) = g.c[k];
    return S.det();
}

Rat poly_disc(const UniPoly& f) {
    if (f.degree() < 2) throw degree_too_small("discriminant needs degree >= 2");
    UniPoly fp = f.derivative();
    if (fp.is_zero()) return Rat(0);
    long n = f.degree();
    Rat d = resultant(f, fp) / f.lc();
    long e = (n * (n - 1)) / 2;
    return (e % 2 == 1) ? -d : d;
}

std::vector<Rat> rational_roots(const UniPoly& f) {
    std::vector<Rat> roots;
    if (f.is_zero()) return roots;
    UniPoly g = f.primitive_integer();
    // strip factors of x
    while (!g.is_zero() && g.c[0] == 0) {
        roots.emplace_back(0);
        std::vector<Rat> v(g.c.begin() + 1, g.c.end());
        g = UniPoly(std::move(v));
    }
    if (g.degree() < 1) return roots;
    auto divisors = [](const Int& n) {
        std::vector<Int> out;
        Int m = abs(n);
        for (Int d = 1; d * d <= m; ++d)
            if (m % d == 0) {
                out.push_back(d);
                if (d * d != m) out.push_back(m / d);
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    const Int a0 = rat_num(g.c[0]);
    const Int an = rat_num(g.lc());
    std::vector<Rat> candidates;
    for (const Int& p : divisors(a0))
        for (const Int& q : divisors(an)) {
            Int gg;
            mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (gg != 1) continue;
            candidates.push_back(make_rat(p, q));
            candidates.push_back(make_rat(-p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rat& r : candidates) {
        while (g.degree() >= 1 && g.eval(r) == 0) {
            roots.push_back(r);
            // deflate by (x - r)
            UniPoly q, rem;
            UniPoly lin(std::vector<Rat>{-r, Rat(1)});
            UniPoly::divmod(g, lin, q, rem);
            g = q;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace endoatlas
