#include "kronjord/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace kronjord;

using QMat = Matrix<Rational>;

namespace {

QMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    QMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rationals are canonical and exact") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("3/1").to_string() == "3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    const Rational x(7, 3), y(-5, 11);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(x.inverse() == Rational(3, 7));
}

TEST_CASE("prime field arithmetic") {
    const Field<Fp> f(7);
    const Fp three = f.from_int(3);
    CHECK((three * three.inverse()) == f.one());
    CHECK(f.from_int(-1).v == 6);
    CHECK((f.from_int(5) + f.from_int(4)).v == 2);
    CHECK_THROWS(Field<Fp>(8));
}

TEST_CASE("rank examples") {
    CHECK(rank(QMat(3, 2)) == 0);
    CHECK(rank(QMat::identity(4)) == 4);
    CHECK(rank(QMat::from_ints({{1, 2}, {2, 4}, {3, 6}})) == 1);
    CHECK(rank(QMat(0, 3)) == 0);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(QMat::identity(3)).empty());
    CHECK(kernel_basis(QMat(2, 2)).size() == 2);
    const auto k = kernel_basis(QMat::from_ints({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve examples") {
    const auto x = solve_linear_system(QMat::identity(2), {Rational(3), Rational(5)});
    REQUIRE(x);
    CHECK((*x == Vector<Rational>{Rational(3), Rational(5)}));
    const auto y = solve_linear_system(QMat::from_ints({{1, 1}}), {Rational(2)});
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == Rational(2));
    CHECK(!solve_linear_system(QMat::from_ints({{1}, {1}}), {Rational(0), Rational(1)}));
    CHECK_THROWS_AS(solve_linear_system(QMat::identity(2), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("block assembly") {
    const auto one = QMat::identity(1);
    const QMat zero(1, 1);
    CHECK(block_matrix<Rational>({{one, zero}, {zero, one}}) == QMat::identity(2));
    const auto a = QMat::from_ints({{1, 2}, {3, 4}});
    CHECK(block_matrix<Rational>({{a}}) == a);
    const auto top = QMat::from_ints({{1, 2}});
    const auto stacked = block_matrix<Rational>({{top}, {a}});
    CHECK(stacked.rows() == 3);
    CHECK(stacked.cols() == 2);
    CHECK_THROWS_AS(block_matrix<Rational>({{one, zero}, {one}}), std::invalid_argument);
    CHECK_THROWS_AS(block_matrix<Rational>({{one, QMat(2, 1)}}), std::invalid_argument);
}

TEST_CASE("rank-nullity, transpose rank and kernel vectors on random matrices") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        auto m = random_matrix(rng, rows, cols, 3);
        if (t % 3 == 0 && rows > 1) {  // force dependent rows
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Rational(2);
        }
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        CHECK(rank(m) == rank(m.transpose()));
        for (const auto& v : k) {
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        }
        const auto p = cokernel_projection(m);
        CHECK((p * m).is_zero());
        CHECK(p.rows() + rank(m) == rows);
    }
}

TEST_CASE("elimination over a prime field") {
    const Field<Fp> f(5);
    const auto m = Matrix<Fp>::from_ints({{1, 2}, {3, 1}}, f);  // det = 1 - 6 = -5 = 0 mod 5
    CHECK(rank(m) == 1);
    CHECK(kernel_basis(m).size() == 1);
}
