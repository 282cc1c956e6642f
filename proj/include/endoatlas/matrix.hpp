#ifndef ENDOATLAS_MATRIX_HPP
#define ENDOATLAS_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "endoatlas/bigint.hpp"

namespace endoatlas {

// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
        : rows(r), cols(c), a(std::move(entries)) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMatrix transpose() const;
    IntMatrix reduced_mod(const Int& m) const;
    bool is_identity() const;
    std::string str() const;
};

struct HnfResult {
    IntMatrix H;  // upper triangular, positive pivots, entries above pivots reduced
    IntMatrix U;  // unimodular, U*M = H
    Int det;      // determinant of M
};

// Row-style Hermite normal form of a nonsingular square integer matrix.
// Throws singular_matrix when rank deficient.
HnfResult hnf_and_det(const IntMatrix& M);

// HNF row reduction of an arbitrary (possibly tall) integer matrix;
// returns the nonzero rows, a canonical basis of the row lattice.
IntMatrix hnf_rows(const IntMatrix& M);

// Dense rational matrix, row-major, always canonical entries.
struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    RatMatrix(std::size_t r, std::size_t c, std::vector<Rat> entries)
        : rows(r), cols(c), a(std::move(entries)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMatrix identity(std::size_t n);

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Rat det() const;
    // inverse of a square matrix; throws singular_matrix
    RatMatrix inverse() const;
    // least common multiple of entry denominators
    Int common_denominator() const;
    std::string str() const;
};

// row vector times matrix
std::vector<Rat> row_times(const std::vector<Rat>& v, const RatMatrix& M);

}  // namespace endoatlas

#endif
