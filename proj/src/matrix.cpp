#include "endoatlas/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "endoatlas/errors.hpp"

namespace endoatlas {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::reduced_mod(const Int& m) const {
    IntMatrix r(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = mod_floor(a[i], m);
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// in-place row HNF on M, mirroring row operations onto U (when given);
// returns the sign of the tracked unimodular transform
int row_hnf_inplace(IntMatrix& M, IntMatrix* U) {
    int sign = 1;
    const std::size_t m = M.rows, n = M.cols;
    auto swap_rows = [&](std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(M.at(r, j), M.at(s, j));
        if (U)
            for (std::size_t j = 0; j < U->cols; ++j) std::swap(U->at(r, j), U->at(s, j));
        sign = -sign;
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) M.at(r, j) = -M.at(r, j);
        if (U)
            for (std::size_t j = 0; j < U->cols; ++j) U->at(r, j) = -U->at(r, j);
        sign = -sign;
    };
    auto addmul_row = [&](std::size_t r, std::size_t s, const Int& q) {
        // row r -= q * row s
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) M.at(r, j) -= q * M.at(s, j);
        if (U)
            for (std::size_t j = 0; j < U->cols; ++j) U->at(r, j) -= q * U->at(s, j);
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
        // Euclidean reduction among rows >= pivot_row in this column
        while (true) {
            std::size_t best = m;
            for (std::size_t r = pivot_row; r < m; ++r) {
                if (M.at(r, col) == 0) continue;
                if (best == m || abs(M.at(r, col)) < abs(M.at(best, col))) best = r;
            }
            if (best == m) break;  // column is zero below pivot_row
            swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < m; ++r) {
                if (M.at(r, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), M.at(r, col).get_mpz_t(), M.at(pivot_row, col).get_mpz_t());
                addmul_row(r, pivot_row, q);
                if (M.at(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (M.at(pivot_row, col) == 0) continue;  // no pivot in this column
        if (M.at(pivot_row, col) < 0) negate_row(pivot_row);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), M.at(r, col).get_mpz_t(), M.at(pivot_row, col).get_mpz_t());
            addmul_row(r, pivot_row, q);
        }
        ++pivot_row;
    }
    return sign;
}

}  // namespace

HnfResult hnf_and_det(const IntMatrix& M) {
    if (M.rows != M.cols) throw singular_matrix("hnf_and_det requires a square matrix");
    HnfResult res;
    res.H = M;
    res.U = IntMatrix::identity(M.rows);
    int sign = row_hnf_inplace(res.H, &res.U);
    Int prod = 1;
    for (std::size_t i = 0; i < M.rows; ++i) {
        if (res.H.at(i, i) == 0) throw singular_matrix();
        prod *= res.H.at(i, i);
    }
    // U*M = H with det(U) = sign, so det(M) = sign * det(H)
    res.det = Int(sign) * prod;
    return res;
}

IntMatrix hnf_rows(const IntMatrix& M) {
    IntMatrix W = M;
    row_hnf_inplace(W, nullptr);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < W.rows; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < W.cols; ++j)
            if (W.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++rank;
    }
    IntMatrix out(rank, W.cols);
    std::size_t r = 0;
    for (std::size_t i = 0; i < W.rows; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < W.cols; ++j)
            if (W.at(i, j) != 0) { nonzero = true; break; }
        if (!nonzero) continue;
        for (std::size_t j = 0; j < W.cols; ++j) out.at(r, j) = W.at(i, j);
        ++r;
    }
    return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    RatMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Rat RatMatrix::det() const {
    RatMatrix W = *this;
    const std::size_t n = rows;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (W.at(r, col) != 0) { piv = r; break; }
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(W.at(piv, j), W.at(col, j));
            d = -d;
        }
        d *= W.at(col, col);
        Rat inv = 1 / W.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (W.at(r, col) == 0) continue;
            Rat f = W.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) W.at(r, j) -= f * W.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (rows != cols) throw singular_matrix("inverse requires a square matrix");
    const std::size_t n = rows;
    RatMatrix W = *this, R = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (W.at(r, col) != 0) { piv = r; break; }
        if (piv == n) throw singular_matrix();
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(W.at(piv, j), W.at(col, j));
                std::swap(R.at(piv, j), R.at(col, j));
            }
        Rat inv = 1 / W.at(col, col);
        for (std::size_t j = 0; j < n; ++j) { W.at(col, j) *= inv; R.at(col, j) *= inv; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || W.at(r, col) == 0) continue;
            Rat f = W.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                W.at(r, j) -= f * W.at(col, j);
                R.at(r, j) -= f * R.at(col, j);
            }
        }
    }
    return R;
}

Int RatMatrix::common_denominator() const {
    Int den = 1;
    for (const Rat& q : a) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        den = d;
    }
    return den;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Rat> row_times(const std::vector<Rat>& v, const RatMatrix& M) {
    std::vector<Rat> out(M.cols, Rat(0));
    for (std::size_t k = 0; k < M.rows; ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < M.cols; ++j) out[j] += v[k] * M.at(k, j);
    }
    return out;
}

}  // namespace endoatlas
