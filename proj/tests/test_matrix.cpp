#include <doctest.h>

#include "artmod/errors.hpp"
#include "artmod/matrix.hpp"
#include "test_helpers.hpp"

using namespace artmod;
using namespace artmod::testing;

TEST_CASE("rref of identity and zero") {
    auto [r1, p1] = rref(Mat::identity(3));
    CHECK(r1 == Mat::identity(3));
    CHECK(p1 == std::vector<int>{0, 1, 2});

    auto [r2, p2] = rref(Mat::zero(2, 2));
    CHECK(r2 == Mat::zero(2, 2));
    CHECK(p2.empty());
}

TEST_CASE("rref eliminates the fact-(1) matrix for e=2,f=3,d=1") {
    // hand elimination: subtract the second row from the first
    auto [r, p] = rref(mat({{1, 1}, {0, 1}}));
    CHECK(r == Mat::identity(2));
    CHECK(p == std::vector<int>{0, 1});
    CHECK(rank(mat({{1, 1}, {0, 1}})) == 2);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat::identity(4)) == 4);
    CHECK(rank(Mat::zero(3, 5)) == 0);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Mat::identity(3)).cols() == 0);

    Mat k = kernel_basis(mat({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.col(0) == vec({1, -1}));

    CHECK(kernel_basis(Mat::zero(2, 2)).cols() == 2);
}

TEST_CASE("solve") {
    Vec b = vec({3, -2});
    auto x = solve(Mat::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve(Mat::zero(2, 2), vec({1, 0})));

    auto y = solve(mat({{2}}), vec({1}));
    REQUIRE(y);
    CHECK((*y)[0] == q(1, 2));
}

TEST_CASE("determinants") {
    CHECK(det(Mat::identity(3)) == 1);
    CHECK(det(mat({{1, 1}, {0, 1}})) == 1);
    CHECK(det(Mat::zero(2, 2)) == 0);
    CHECK_THROWS_AS(det(Mat::zero(2, 3)), ValidationError);
}

TEST_CASE("rank-nullity and determinant-rank equivalence on random matrices") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = rng.in_range(1, 6), cols = rng.in_range(1, 6);
        Mat m = random_matrix(rng, rows, cols, 3);
        CHECK(rank(m) + kernel_basis(m).cols() == cols);
        if (rows == cols) CHECK((det(m) != 0) == (rank(m) == rows));
        Mat k = kernel_basis(m);
        if (k.cols()) CHECK((m * k).is_zero());
    }
}

TEST_CASE("arithmetic is exact") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Mat a = random_rational_matrix(rng, 4, 4);
        Mat b = random_rational_matrix(rng, 4, 4);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("inverse and solve_matrix") {
    SplitMix64 rng(19);
    Mat a = mat({{2, 1}, {1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Mat::identity(2));
    CHECK_FALSE(inverse(mat({{1, 1}, {1, 1}})));

    Mat b = random_matrix(rng, 2, 3);
    auto x = solve_matrix(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
}

TEST_CASE("binomial coefficient convention") {
    CHECK(binomial_coeff(5, 0) == 1);
    CHECK(binomial_coeff(5, -1) == 0);
    CHECK(binomial_coeff(1, 1) == 1);
    CHECK(binomial_coeff(2, 1) == 2);
    CHECK(binomial_coeff(0, 1) == 0);
    CHECK(binomial_coeff(6, 3) == 20);
    CHECK(binomial_coeff(4, 6) == 0);  // falling factorial hits zero
}

TEST_CASE("kronecker product layout") {
    Mat a = mat({{1, 2}});
    Mat b = mat({{0, 3}, {4, 0}});
    Mat k = a.kron(b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k(0, 1) == 3);
    CHECK(k(0, 3) == 6);
    CHECK(k(1, 0) == 4);
    CHECK(k(1, 2) == 8);
}

TEST_CASE("column space basis picks leftmost independent columns") {
    Mat m = mat({{1, 2, 0}, {2, 4, 1}});
    Mat b = column_space_basis(m);
    REQUIRE(b.cols() == 2);
    CHECK(b.col(0) == vec({1, 2}));
    CHECK(b.col(1) == vec({0, 1}));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_to_string(q(-3, 6)) == "-1/2");
    CHECK(rat_to_string(q(4)) == "4");
    CHECK(rat_from_string("7/2") == q(7, 2));
    CHECK(rat_from_string("-5") == q(-5));
    CHECK_THROWS(rat_from_string("x"));
    CHECK_THROWS(rat_from_string("1/0"));
}
