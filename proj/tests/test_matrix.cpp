#include "ontomesh/matrix.hpp"

#include "ontomesh/errors.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace ontomesh;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

} // namespace

TEST_CASE("multiplication is exact") {
    testgen::Rng rng(1001);
    for (int round = 0; round < 10; ++round) {
        const RationalMatrix a = testgen::random_rational_matrix(1 + round % 5, rng);
        CHECK(multiply(RationalMatrix::identity(a.dimension()), a) == a);
        CHECK(multiply(a, RationalMatrix::identity(a.dimension())) == a);
    }

    CHECK(is_identity(multiply(k_matrix(2), k_matrix(2)))); // K_2 * K_2 = I

    CHECK_THROWS_AS(multiply(RationalMatrix(2), RationalMatrix(3)), DimensionError);
}

TEST_CASE("dimension zero is rejected") {
    CHECK_THROWS_AS(RationalMatrix(0), DomainError);
}

TEST_CASE("inversion: identities and singular ranks") {
    CHECK(invert(RationalMatrix::identity(4)) == RationalMatrix::identity(4));

    SUBCASE("all-zero matrix reports rank 0") {
        try {
            invert(RationalMatrix(3));
            FAIL("expected SingularError");
        } catch (const SingularError& e) {
            CHECK(e.rank == 0);
        }
    }

    SUBCASE("rank-deficient matrix reports the achieved rank") {
        // Third row is the sum of the first two.
        const RationalMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}});
        try {
            invert(m);
            FAIL("expected SingularError");
        } catch (const SingularError& e) {
            CHECK(e.rank == 2);
        }
    }
}

TEST_CASE("inversion properties over random invertible matrices") {
    testgen::Rng rng(1002);
    for (int round = 0; round < 12; ++round) {
        const std::size_t n = 1 + testgen::pick(rng, 6);
        const RationalMatrix m = testgen::random_invertible_matrix(n, rng);
        const RationalMatrix inverse = invert(m);
        CHECK(is_identity(multiply(m, inverse)));
        CHECK(is_identity(multiply(inverse, m)));
        CHECK(invert(inverse) == m);
    }
}

TEST_CASE("inverting an integer matrix stays within forced denominators") {
    // Entries of the inverse times det(M) must be integers (adjugate).
    testgen::Rng rng(1003);
    for (int round = 0; round < 8; ++round) {
        const std::size_t n = 2 + testgen::pick(rng, 4);
        RationalMatrix m(n);
        do {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) = static_cast<long long>(testgen::pick(rng, 7)) - 3;
                }
            }
        } while (determinant(m) == 0);

        const Rational det = determinant(m);
        const RationalMatrix inverse = invert(m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(denominator(Rational(inverse.at(i, j) * det)) == 1);
            }
        }
    }
}

TEST_CASE("determinant matches hand values") {
    CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == Rational(-2));
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == Rational(-1));
    CHECK(determinant(RationalMatrix(3)) == Rational(0));
    CHECK(determinant(RationalMatrix::identity(5)) == Rational(1));
}

TEST_CASE("maximally connected network matrix") {
    const RationalMatrix k2 = k_matrix(2);
    CHECK(k2.at(0, 0) == 0);
    CHECK(k2.at(0, 1) == 1);
    CHECK(k2.at(1, 0) == 1);
    CHECK(k2.at(1, 1) == 0);

    const RationalMatrix k3 = k_matrix(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(k3.at(i, j) == (i == j ? 0 : 1));
        }
    }

    const RationalMatrix k4 = k_matrix(4);
    for (std::size_t i = 0; i < 4; ++i) {
        Rational row_sum(0);
        for (std::size_t j = 0; j < 4; ++j) {
            row_sum += k4.at(i, j);
        }
        CHECK(row_sum == 3); // n-1 ones per row
    }

    CHECK_THROWS_AS(k_matrix(1), DomainError);
    CHECK_THROWS_AS(k_inverse_closed_form(0), DomainError);
}

TEST_CASE("closed-form inverse of the maximally connected network") {
    // n=2: the diagonal -(n-2)/(n-1) collapses to 0 and K_2 is its own inverse.
    CHECK(k_inverse_closed_form(2) == k_matrix(2));

    const RationalMatrix k4i = k_inverse_closed_form(4);
    CHECK(k4i.at(0, 1) == Rational(Integer(1), Integer(3)));
    CHECK(k4i.at(2, 2) == Rational(Integer(-2), Integer(3)));

    CHECK(is_identity(multiply(k_matrix(7), k_inverse_closed_form(7))));

    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(k_inverse_closed_form(n) == invert(k_matrix(n)));
    }
}

TEST_CASE("identity test is exact") {
    CHECK(is_identity(RationalMatrix::identity(5)));
    CHECK(!is_identity(k_matrix(2)));

    testgen::Rng rng(1004);
    const RationalMatrix m = testgen::random_invertible_matrix(4, rng);
    CHECK(is_identity(multiply(m, invert(m))));

    RationalMatrix off = RationalMatrix::identity(3);
    off.at(2, 2) = Rational(Integer(999999), Integer(1000000));
    CHECK(!is_identity(off));
}
