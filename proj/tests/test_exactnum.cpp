#include "doctest.h"

#include <random>

#include "clusterbd/exactnum.hpp"

using namespace clusterbd;

namespace {

// Plain Gauss-Jordan elimination over Q, kept deliberately naive as an oracle.
std::size_t naive_rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), z(0, 9);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (z(rng) >= zero_bias) m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("12")) == "12");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(QMatrix::identity(6)) == 6);
    CHECK(rank(QMatrix(3, 5)) == 0);
    const QMatrix b = QMatrix::from_ints({{0, -1, -1, 1, 0, 0, 0, 0},
                                          {1, 0, -1, -1, 0, 0, 1, 0},
                                          {1, 1, 0, 0, 1, -1, -1, 0},
                                          {-1, 1, 0, 0, 1, 1, 0, -1},
                                          {0, 0, -1, -1, 0, 1, 0, 1},
                                          {0, 0, 1, -1, -1, 0, 0, 0}});
    CHECK(rank(b) == 6);
    CHECK(rank(QMatrix::from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank agrees with a naive oracle and with the transpose") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 7);
        const QMatrix m = random_matrix(rng, dim(rng), dim(rng), trial % 8);
        CHECK(rank(m) == naive_rank(m));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve_affine basics") {
    const QVector b{make_rational(1, 2), 3, -7};
    auto s = solve_affine(QMatrix::identity(3), b);
    REQUIRE(s);
    CHECK(s->particular == b);
    CHECK(s->kernel.empty());

    auto z = solve_affine(QMatrix(2, 3), QVector(2));
    REQUIRE(z);
    CHECK(z->particular == QVector(3));
    CHECK(z->kernel.size() == 3);

    CHECK_FALSE(solve_affine(QMatrix::from_ints({{1, 1}, {1, 1}}), QVector{1, 2}));
}

TEST_CASE("affine solutions satisfy the system exactly") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 6);
        const QMatrix a = random_matrix(rng, dim(rng), dim(rng), trial % 7);
        const QMatrix x0 = random_matrix(rng, a.cols(), 1, 0);
        const QVector x(x0.entries().begin(), x0.entries().end());
        const QVector b = a * x;
        auto s = solve_affine(a, b);
        REQUIRE(s);
        CHECK(a * s->particular == b);
        for (const auto& k : s->kernel) CHECK(a * k == QVector(a.rows()));
        CHECK(rank(a) + s->kernel.size() == a.cols());
    }
}

TEST_CASE("matrix JSON round trip is exact") {
    std::mt19937 rng(3);
    const QMatrix m = random_matrix(rng, 4, 5, 3);
    const auto j = to_json(m);
    CHECK(qmatrix_from_json(j) == m);
    CHECK(to_json(qmatrix_from_json(j)).dump() == j.dump());
}
