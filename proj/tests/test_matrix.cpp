#include <doctest.h>

#include "test_support.hpp"

using namespace freecert;
using test::mat;
using test::random_invertible;

TEST_CASE("identity is neutral") {
    SplitMix64 rng(11);
    MatQ a = test::random_matrix(rng, 4);
    CHECK(MatQ::identity(4) * a == a);
    CHECK(a * MatQ::identity(4) == a);
}

TEST_CASE("2x2 inverse matches the adjugate") {
    MatQ a = mat({{1, 1}, {1, 2}});
    MatQ expected = mat({{2, -1}, {-1, 1}});
    CHECK(inverse(a) == expected);
    CHECK(a * inverse(a) == MatQ::identity(2));
    CHECK(determinant(a) == 1);
}

TEST_CASE("diagonal Laurent matrices invert by exponent negation") {
    MatL a(2), b(2);
    a.at(0, 0) = LaurentPoly::t(-1);
    a.at(1, 1) = LaurentPoly::t(1);
    b.at(0, 0) = LaurentPoly::t(1);
    b.at(1, 1) = LaurentPoly::t(-1);
    CHECK(a * b == MatL::identity(2));
}

TEST_CASE("random inverses multiply back to the identity") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 1 + static_cast<int>(rng.below(7));
        MatQ a = random_invertible(rng, dim);
        CHECK(inverse(a) * a == MatQ::identity(dim));
    }
}

TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), SingularMatrix);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(mat({{1}}) * mat({{1, 0}, {0, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(MatQ(0), DimensionMismatch);
}

TEST_CASE("scalar detection") {
    CHECK(MatQ::identity(3).is_scalar());
    CHECK(MatQ(3).is_scalar());
    MatQ two = MatQ::identity(3) + MatQ::identity(3);
    CHECK(two.is_scalar());
    CHECK_FALSE(mat({{2, 0, 0}, {0, 2, 1}, {0, 0, 2}}).is_scalar());
    CHECK_FALSE(mat({{2, 0}, {0, 3}}).is_scalar());
}
