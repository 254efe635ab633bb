#include <doctest.h>

#include "harmcont/linalg.hpp"
#include "test_util.hpp"

using namespace harmcont;
using hctest::Q;

TEST_CASE("combinations are lexicographic and complete") {
    auto c32 = combinations(3, 2);
    REQUIRE(c32.size() == 3);
    CHECK(c32[0] == std::vector<int>{0, 1});
    CHECK(c32[1] == std::vector<int>{0, 2});
    CHECK(c32[2] == std::vector<int>{1, 2});
    CHECK(combinations(10, 5).size() == 252);
    CHECK(combinations(4, 0).size() == 1);
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    SeededRng rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            MatQ m = hctest::random_matrix(rng, n);
            CHECK(det_exact(m) == hctest::naive_det(m));
        }
    }
}

TEST_CASE("determinant handles zero pivots") {
    MatQ m = hctest::mat(3, 3, {"0", "1", "2", "1", "0", "3", "4", "5", "0"});
    CHECK(det_exact(m) == hctest::naive_det(m));
    MatQ singular = hctest::mat(2, 2, {"1", "2", "2", "4"});
    CHECK(det_exact(singular) == 0);
    CHECK(det_exact(MatQ::identity(4)) == 1);
}

TEST_CASE("solve_dense solves exactly") {
    SeededRng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        MatQ a = hctest::random_matrix(rng, 5);
        if (det_exact(a) == 0) continue;
        MatQ b(5, 2);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 2; ++j) b(i, j) = random_rational_in(rng, Q("1/8"), Q("8"));
        MatQ x = solve_dense(a, b);
        CHECK(a * x == b);
    }
}

TEST_CASE("solve_dense reports singular systems") {
    MatQ a = hctest::mat(2, 2, {"1", "2", "2", "4"});
    MatQ b(2, 1, Rational(1));
    CHECK_THROWS_AS(solve_dense(a, b), Error);
}

TEST_CASE("solve_dense in double uses partial pivoting") {
    Matrix<double> a(2, 2);
    a(0, 0) = 1e-14;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 1.0;
    Matrix<double> b(2, 1);
    b(0, 0) = 1.0;
    b(1, 0) = 2.0;
    auto x = solve_dense(a, b);
    CHECK(std::abs(a(0, 0) * x(0, 0) + x(1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(x(0, 0) + x(1, 0) - 2.0) < 1e-12);
}

TEST_CASE("rank_exact") {
    CHECK(rank_exact(MatQ::identity(4)) == 4);
    CHECK(rank_exact(hctest::mat(2, 2, {"1", "2", "2", "4"})) == 1);
    CHECK(rank_exact(MatQ(3, 3)) == 0);
    CHECK(rank_exact(hctest::mat(2, 3, {"1", "0", "1", "0", "1", "1"})) == 2);
}

TEST_CASE("minor_det extracts the right submatrix") {
    MatQ m = hctest::mat(3, 3, {"1", "2", "3", "4", "5", "6", "7", "8", "10"});
    std::vector<int> rows{0, 2}, cols{1, 2};
    CHECK(minor_det(m, rows, cols) == Q("2") * Q("10") - Q("3") * Q("8"));
}
