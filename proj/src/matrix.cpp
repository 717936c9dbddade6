#include "ontomesh/matrix.hpp"

#include "ontomesh/errors.hpp"

#include <string>
#include <utility>

namespace ontomesh {

RationalMatrix::RationalMatrix(std::size_t dimension) : dim_(dimension) {
    if (dimension == 0) {
        throw DomainError("matrix dimension must be at least 1");
    }
    cells_.assign(dim_ * dim_, Rational(0));
}

RationalMatrix RationalMatrix::identity(std::size_t dimension) {
    RationalMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError("cannot multiply " + std::to_string(a.dimension()) + "x" +
                             std::to_string(a.dimension()) + " by " +
                             std::to_string(b.dimension()) + "x" + std::to_string(b.dimension()));
    }
    const std::size_t n = a.dimension();
    RationalMatrix product(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (b.at(k, j) != 0) {
                    product.at(i, j) += aik * b.at(k, j);
                }
            }
        }
    }
    return product;
}

RationalMatrix invert(const RationalMatrix& m) {
    const std::size_t n = m.dimension();

    // Work on the augmented block [M | I].
    std::vector<std::vector<Rational>> work(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            work[i][j] = m.at(i, j);
        }
        work[i][n + i] = 1;
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t row = pivot_row;
        while (row < n && work[row][col] == 0) {
            ++row;
        }
        if (row == n) {
            // Rank-deficient column; keep eliminating so the final rank is exact.
            continue;
        }
        std::swap(work[pivot_row], work[row]);

        const Rational pivot = work[pivot_row][col];
        if (pivot != 1) {
            for (std::size_t j = col; j < 2 * n; ++j) {
                work[pivot_row][j] /= pivot;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot_row || work[r][col] == 0) {
                continue;
            }
            const Rational factor = work[r][col];
            for (std::size_t j = col; j < 2 * n; ++j) {
                work[r][j] -= factor * work[pivot_row][j];
            }
        }
        ++pivot_row;
    }

    if (pivot_row < n) {
        throw SingularError("matrix is singular (rank " + std::to_string(pivot_row) + " of " +
                                std::to_string(n) + ")",
                            pivot_row);
    }

    RationalMatrix inverse(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inverse.at(i, j) = std::move(work[i][n + j]);
        }
    }
    return inverse;
}

Rational determinant(const RationalMatrix& m) {
    const std::size_t n = m.dimension();
    std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            work[i][j] = m.at(i, j);
        }
    }

    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t row = col;
        while (row < n && work[row][col] == 0) {
            ++row;
        }
        if (row == n) {
            return Rational(0);
        }
        if (row != col) {
            std::swap(work[row], work[col]);
            negate = !negate;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work[r][col] == 0) {
                continue;
            }
            const Rational factor = work[r][col] / work[col][col];
            for (std::size_t j = col; j < n; ++j) {
                work[r][j] -= factor * work[col][j];
            }
        }
    }

    Rational det(1);
    for (std::size_t i = 0; i < n; ++i) {
        det *= work[i][i];
    }
    return negate ? -det : det;
}

RationalMatrix k_matrix(std::size_t n) {
    if (n < 2) {
        throw DomainError("maximally connected network needs at least 2 nodes");
    }
    RationalMatrix k(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                k.at(i, j) = 1;
            }
        }
    }
    return k;
}

RationalMatrix k_inverse_closed_form(std::size_t n) {
    if (n < 2) {
        throw DomainError("maximally connected network needs at least 2 nodes");
    }
    const Rational off(Integer(1), Integer(n - 1));
    const Rational diag(-Integer(n - 2), Integer(n - 1));
    RationalMatrix k(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            k.at(i, j) = i == j ? diag : off;
        }
    }
    return k;
}

bool is_identity(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            if (m.at(i, j) != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ontomesh
