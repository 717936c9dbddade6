#pragma once

#include "ontomesh/rational.hpp"

#include <cstddef>
#include <vector>

namespace ontomesh {

// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    // Zero-filled; dimension must be >= 1.
    explicit RationalMatrix(std::size_t dimension);

    static RationalMatrix identity(std::size_t dimension);

    std::size_t dimension() const noexcept { return dim_; }

    const Rational& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }
    Rational& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<Rational> cells_; // row-major
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Gauss-Jordan elimination with deterministic pivoting: the pivot is the
// first nonzero entry in column order. Throws SingularError carrying the
// achieved rank when no inverse exists.
RationalMatrix invert(const RationalMatrix& m);

// Exact determinant; 0 for singular input.
Rational determinant(const RationalMatrix& m);

// Adjacency of the maximally connected network on n >= 2 nodes: every entry
// 1 except the zero diagonal.
RationalMatrix k_matrix(std::size_t n);

// Closed-form inverse of k_matrix(n): 1/(n-1) off the diagonal,
// -(n-2)/(n-1) on it.
RationalMatrix k_inverse_closed_form(std::size_t n);

// Exact test: diagonal all 1, off-diagonal all 0.
bool is_identity(const RationalMatrix& m);

} // namespace ontomesh
