#include "doctest.h"

#include <random>

#include "clusterbd/cluster.hpp"

using namespace clusterbd;

namespace {

const std::vector<std::vector<long>> kBcg = {{0, -1, -1, 1, 0, 0, 0, 0},  {1, 0, -1, -1, 0, 0, 1, 0},
                                             {1, 1, 0, 0, 1, -1, -1, 0},  {-1, 1, 0, 0, 1, 1, 0, -1},
                                             {0, 0, -1, -1, 0, 1, 0, 1},  {0, 0, 1, -1, -1, 0, 0, 0}};

// The two-case mutation formula applied literally, entry by entry.
std::vector<std::vector<long>> brute_mutation(const std::vector<std::vector<long>>& b, std::size_t k) {
    auto out = b;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            if (i == k || j == k) {
                out[i][j] = -b[i][j];
                continue;
            }
            const long prod = b[i][k] * b[k][j];
            const long sign = b[i][k] > 0 ? 1 : (b[i][k] < 0 ? -1 : 0);
            out[i][j] = b[i][j] + sign * std::max(prod, 0L);
        }
    return out;
}

ExtExchangeMatrix random_exchange_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(1, 6), stable(0, 4), entry(-3, 3);
    const std::size_t n = size(rng), m = stable(rng);
    std::vector<std::vector<long>> rows(n, std::vector<long>(n + m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            rows[i][j] = entry(rng);
            rows[j][i] = -rows[i][j];
        }
        for (std::size_t j = n; j < n + m; ++j) rows[i][j] = entry(rng);
    }
    return ExtExchangeMatrix(rows, m);
}

}  // namespace

TEST_CASE("exchange matrix validation") {
    CHECK_THROWS_AS(ExtExchangeMatrix({{0, 1}, {1, 0}}, 0), InvalidInput);
    CHECK_THROWS_AS(ExtExchangeMatrix({{0, 1, 2}, {-1, 0}}, 1), InvalidInput);
    const auto b = ExtExchangeMatrix::from_rows(kBcg);
    CHECK(b.n() == 6);
    CHECK(b.m() == 2);
}

TEST_CASE("matrix mutation") {
    const auto b = ExtExchangeMatrix({{0, 1}, {-1, 0}}, 0);
    CHECK(mutate_matrix(b, 0) == ExtExchangeMatrix({{0, -1}, {1, 0}}, 0));
    CHECK_THROWS_AS(mutate_matrix(ExtExchangeMatrix::from_rows(kBcg), 6), IndexOutOfRange);

    const auto bcg = ExtExchangeMatrix::from_rows(kBcg);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(mutate_matrix(bcg, k).rows() == brute_mutation(kBcg, k));
        CHECK(mutate_matrix(mutate_matrix(bcg, k), k) == bcg);
    }
}

TEST_CASE("mutation is an involution on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto b = random_exchange_matrix(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, b.n() - 1)(rng);
        const auto mu = mutate_matrix(b, k);
        CHECK(mu.rows() == brute_mutation(b.rows(), k));
        CHECK(mutate_matrix(mu, k) == b);
    }
}

TEST_CASE("exchange relation with empty products") {
    const ContextPtr ctx = make_context({"a", "b"});
    const auto a = LaurentPoly::variable(ctx, "a"), b = LaurentPoly::variable(ctx, "b");
    Seed mono{ExtExchangeMatrix({{0, 0}}, 1), {"a", "b"}, {a, b}};
    auto r = exchange_variable(mono, 0);
    REQUIRE(r.regular());
    CHECK(*r.quotient == LaurentPoly::variable(ctx, "a", -1) * 2);
    CHECK_FALSE(r.polynomial());

    Seed sum{ExtExchangeMatrix({{0, 0}}, 1), {"a", "b"}, {a + b, b}};
    CHECK_FALSE(exchange_variable(sum, 0).regular());
    CHECK_THROWS_AS(exchange_variable(sum, 1), IndexOutOfRange);
    Seed zero{ExtExchangeMatrix({{0, 0}}, 1), {"a", "b"}, {LaurentPoly(ctx), b}};
    CHECK_THROWS_AS(exchange_variable(zero, 0), DivisionByZero);
}

TEST_CASE("SL2 exchange agrees with elimination of x22") {
    // On SL2 with x22 eliminated, x11 * x11' = x12 x21 + 1 forces x11' = x22.
    const ContextPtr ctx = make_context({"x11", "x12", "x21"});
    auto v = [&](const char* n) { return LaurentPoly::variable(ctx, n); };
    Seed seed{ExtExchangeMatrix({{0, 1, 1}}, 2), {"x11", "x12", "x21"}, {v("x11"), v("x12"), v("x21")}};
    const auto r = exchange_variable(seed, 0);
    REQUIRE(r.regular());
    CHECK_FALSE(r.polynomial());
    const LaurentPoly x22 = (v("x12") * v("x21") + LaurentPoly::constant(ctx, 1)) * LaurentPoly::variable(ctx, "x11", -1);
    CHECK(*r.quotient == x22);

    // With all four entries and det appended as a stable variable the quotient is x22 itself.
    const ContextPtr m2 = matrix_context(2);
    auto w = [&](const char* n) { return LaurentPoly::variable(m2, n); };
    const auto det = w("x11") * w("x22") - w("x12") * w("x21");
    Seed gl{ExtExchangeMatrix({{0, 1, 1, -1}}, 3), {"x11", "x12", "x21", "det"}, {w("x11"), w("x12"), w("x21"), det}};
    const auto q = exchange_variable(gl, 0);
    REQUIRE(q.polynomial());
    CHECK(*q.quotient == w("x22"));
    const auto back = mutate_seed(mutate_seed(gl, 0), 0);
    CHECK(back.matrix == gl.matrix);
    CHECK(back.variables == gl.variables);
}

TEST_CASE("compatibility check") {
    const auto one = ExtExchangeMatrix({{0, 1}}, 1);
    const auto ok = check_compatibility(one, QMatrix::from_ints({{0, 5}, {-5, 0}}));
    REQUIRE(ok);
    CHECK(ok.diagonal == QVector{-5});

    const auto bad = check_compatibility(ExtExchangeMatrix({{0, 1, 0}, {-1, 0, 1}}, 1), QMatrix(3, 3));
    CHECK_FALSE(bad);
    CHECK(bad.bad_row == 0);
    CHECK(bad.bad_col == 0);

    CHECK_FALSE(check_compatibility(one, QMatrix::from_ints({{0, 1}, {1, 0}})));
    CHECK_FALSE(check_compatibility(one, QMatrix(3, 3)));
}

TEST_CASE("toric weights and rank") {
    const auto b = ExtExchangeMatrix::from_rows(kBcg);
    const std::vector<long> eta{1, 1, 0, 1, -1, 1, 0, 0}, zeta{1, -1, 1, 0, 1, 1, 0, 0};
    WeightAssignment w;
    for (std::size_t i = 0; i < 8; ++i) {
        w.eta.push_back({eta[i]});
        w.zeta.push_back({zeta[i]});
    }
    CHECK(check_toric_weights(b, w, 1).ok());

    WeightAssignment zero{std::vector<QVector>(8, QVector{0}), std::vector<QVector>(8, QVector{0})};
    const auto rep = check_toric_weights(b, zero, 1);
    CHECK_FALSE(rep.span_ok());
    CHECK(rep.balance_ok());

    const auto rk = check_full_rank_and_count(b, 2);
    CHECK(rk.rank == 6);
    CHECK(rk.ok());
    CHECK_FALSE(check_full_rank_and_count(ExtExchangeMatrix({{0, 0}, {0, 0}}, 0), 0).ok());
}

TEST_CASE("compatible pairs have full-rank exchange matrices") {
    std::mt19937 rng(77);
    int compatible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = random_exchange_matrix(rng);
        std::uniform_int_distribution<int> e(-2, 2);
        QMatrix omega(b.cols(), b.cols());
        for (std::size_t i = 0; i < b.cols(); ++i)
            for (std::size_t j = i + 1; j < b.cols(); ++j) {
                omega(i, j) = e(rng);
                omega(j, i) = -omega(i, j);
            }
        if (check_compatibility(b, omega)) {
            ++compatible;
            CHECK(rank(b.to_qmatrix()) == b.n());
        }
    }
    // n = 1 with a stable column produces compatible pairs regularly.
    CHECK(compatible > 0);
}

TEST_CASE("seed JSON round trip") {
    const ContextPtr m2 = matrix_context(2);
    auto w = [&](const char* n) { return LaurentPoly::variable(m2, n); };
    const auto det = w("x11") * w("x22") - w("x12") * w("x21");
    Seed gl{ExtExchangeMatrix({{0, 1, 1, -1}}, 3), {"x11", "x12", "x21", "det"}, {w("x11"), w("x12"), w("x21"), det}};
    const auto j = to_json(gl);
    const Seed back = seed_from_json(j);
    CHECK(back.matrix == gl.matrix);
    CHECK(back.variables == gl.variables);
    CHECK(to_json(back).dump() == j.dump());

    auto without_ctx = j;
    without_ctx.erase("context");
    CHECK(seed_from_json(without_ctx).variables.size() == 4);
    CHECK_THROWS_AS(seed_from_json(nlohmann::json::parse(R"({"n":1})")), InvalidInput);
}
