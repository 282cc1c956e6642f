#include "endoatlas/quat.hpp"

#include <algorithm>
#include <sstream>

#include "endoatlas/errors.hpp"

namespace endoatlas {

namespace {

int epsilon2(const Int& u) { return mod_floor(u, 4) == 1 ? 0 : 1; }          // (u-1)/2 mod 2
int omega2(const Int& u) {                                                   // (u^2-1)/8 mod 2
    Int r = mod_floor(u, 8);
    return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const Int& a, const Int& b, const Int& p) {
    if (a == 0 || b == 0) throw error("hilbert symbol needs nonzero arguments");
    Int u, v;
    long alpha = valuation(a, p, u);
    long beta = valuation(b, p, v);
    if (p == 2) {
        int e = (epsilon2(u) * epsilon2(v) + static_cast<int>(alpha % 2) * omega2(v) +
                 static_cast<int>(beta % 2) * omega2(u)) % 2;
        return e == 0 ? 1 : -1;
    }
    int sign = 1;
    if ((alpha % 2) && (beta % 2)) {
        // (-1)^{alpha beta (p-1)/2}
        if (mod_floor(p, 4) == 3) sign = -sign;
    }
    if (beta % 2) sign *= legendre(mod_floor(u, p), p);
    if (alpha % 2) sign *= legendre(mod_floor(v, p), p);
    return sign;
}

std::vector<Int> QuatAlgebra::ramified_primes(const Int& D, const Int& m) {
    Int a = D / m, b = m;
    std::vector<Int> primes = prime_factors(2 * D);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Int> ram;
    for (const Int& p : primes)
        if (hilbert_symbol(a, b, p) == -1) ram.push_back(p);
    return ram;
}

QuatAlgebra::QuatAlgebra(const Int& D_, const Int& m_) : D(D_), m(m_) {
    if (D <= 0 || !is_squarefree(D))
        throw presentation_mismatch("D must be a positive squarefree integer");
    if (m <= 0 || D % m != 0)
        throw presentation_mismatch("m must be a positive divisor of D");
    i_sq = D / m;
    j_sq = m;
    std::vector<Int> ram = ramified_primes(D, m);
    Int prod = 1;
    for (const Int& p : ram) prod *= p;
    if (prod != D) {
        std::ostringstream os;
        os << "presentation (" << i_sq.get_str() << ", " << m.get_str()
           << ") has ramified-prime product " << prod.get_str() << ", expected " << D.get_str();
        throw presentation_mismatch(os.str());
    }
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
    if (!(alg == o.alg)) throw algebra_mismatch();
    return {alg, a + o.a, b + o.b, c + o.c, d + o.d};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    if (!(alg == o.alg)) throw algebra_mismatch();
    return {alg, a - o.a, b - o.b, c - o.c, d - o.d};
}

Quaternion Quaternion::operator-() const { return {alg, -a, -b, -c, -d}; }

Quaternion Quaternion::scaled(const Rat& s) const { return {alg, a * s, b * s, c * s, d * s}; }

bool Quaternion::operator==(const Quaternion& o) const {
    return alg == o.alg && a == o.a && b == o.b && c == o.c && d == o.d;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    if (!(alg == o.alg)) throw algebra_mismatch();
    const Rat al(alg.i_sq), be(alg.j_sq);
    const Rat ab = al * be;  // = D
    // from i^2 = al, j^2 = be, ij = k = -ji:
    //   ik = al j,  ki = -al j,  jk = -be i,  kj = be i,  k^2 = -al be
    Rat ra = a * o.a + al * (b * o.b) + be * (c * o.c) - ab * (d * o.d);
    Rat rb = a * o.b + b * o.a - be * (c * o.d) + be * (d * o.c);
    Rat rc = a * o.c + c * o.a + al * (b * o.d) - al * (d * o.b);
    Rat rd = a * o.d + d * o.a + b * o.c - c * o.b;
    return {alg, ra, rb, rc, rd};
}

Rat Quaternion::nrd() const {
    const Rat al(alg.i_sq), be(alg.j_sq);
    return a * a - al * (b * b) - be * (c * c) + al * be * (d * d);
}

Quaternion Quaternion::inverse() const {
    Rat n = nrd();
    if (n == 0) throw division_by_zero_norm();
    return conj().scaled(1 / n);
}

std::string Quaternion::str() const {
    std::ostringstream os;
    auto term = [&](const Rat& q, const char* sym, bool& first) {
        if (q == 0) return;
        Rat v = q;
        if (!first) {
            os << (sgn(v) < 0 ? " - " : " + ");
            v = abs(v);
        } else if (sgn(v) < 0) {
            os << "-";
            v = abs(v);
        }
        first = false;
        if (sym[0] == '\0' || v != 1) os << v.get_str();
        os << sym;
    };
    bool first = true;
    term(a, "", first);
    term(b, "i", first);
    term(c, "j", first);
    term(d, "k", first);
    if (first) os << "0";
    return os.str();
}

}  // namespace endoatlas
