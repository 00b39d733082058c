#include "doctest.h"

#include <random>

#include "clusterbd/sklyanin.hpp"

using namespace clusterbd;

namespace {

RTensor triangular_r() {
    // (e11 - e22) ^ e12
    return RTensor::wedge(2, 0, 0, 0, 1) - RTensor::wedge(2, 1, 1, 0, 1);
}

BracketSpec spec_for(const BDTriple& t) {
    return BracketSpec{t.n, assemble_r(t, solve_r0(t).particular), std::nullopt};
}

LaurentPoly x(const ContextPtr& ctx, int i, int j, int power = 1) {
    return LaurentPoly::variable(ctx, "x" + std::to_string(i) + std::to_string(j), power);
}

LaurentPoly random_matrix_poly(std::mt19937& rng, const ContextPtr& ctx, int n, int terms) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Exponents ex(ctx->size(), 0);
        for (int k = 0; k < 3; ++k) ex[std::uniform_int_distribution<int>(0, n * n - 1)(rng)] = e(rng);
        ts.push_back({ex, c(rng)});
    }
    return LaurentPoly::from_terms(ctx, std::move(ts));
}

}  // namespace

TEST_CASE("triangular SL2 brackets") {
    const ContextPtr ctx = matrix_context(2);
    const BracketSpec spec{2, triangular_r(), std::nullopt};
    const auto y1 = x(ctx, 1, 1), y2 = x(ctx, 2, 1), y3 = x(ctx, 1, 1) - x(ctx, 2, 2);
    CHECK(sklyanin_bracket(spec, y1, y2) == y2 * y2);
    CHECK(sklyanin_bracket(spec, y1, y3) == y2 * y3);
    CHECK(sklyanin_bracket(spec, y2, y3).is_zero());
    CHECK(sklyanin_bracket(spec, y1, y1).is_zero());

    const auto z1 = y1, z2 = x(ctx, 2, 1, -1) * -1, z3 = y3 * x(ctx, 2, 1, -1);
    CHECK(sklyanin_bracket(spec, z1, z2) == LaurentPoly::constant(ctx, 1));
    CHECK(sklyanin_bracket(spec, z1, z3).is_zero());
    CHECK(sklyanin_bracket(spec, z2, z3).is_zero());

    const auto ex = extract_coefficient_matrix(spec, {y1, y2, y3});
    CHECK_FALSE(ex);
    CHECK(ex.bad_i == 0);
    CHECK(ex.bad_j == 1);
    REQUIRE(ex.residue);
    CHECK(*ex.residue == y1.pow(-1) * y2);
}

TEST_CASE("antisymmetry and Leibniz on random polynomials") {
    std::mt19937 rng(99);
    const ContextPtr ctx = matrix_context(3);
    const BDTriple cg{3, {{2, 1}}};
    const BracketEngine engine(spec_for(cg), ctx);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_matrix_poly(rng, ctx, 3, 3), g = random_matrix_poly(rng, ctx, 3, 3);
        CHECK((engine.bracket(f, g) + engine.bracket(g, f)).is_zero());
        if (trial % 4 == 0) {
            const auto h = random_matrix_poly(rng, ctx, 3, 2);
            CHECK(engine.bracket(f * g, h) == f * engine.bracket(g, h) + engine.bracket(f, h) * g);
        }
    }
}

TEST_CASE("Jacobi identity on coordinate triples") {
    std::mt19937 rng(4);
    for (const BDTriple& t : {BDTriple{2, {}}, BDTriple{3, {}}, BDTriple{3, {{2, 1}}}}) {
        const ContextPtr ctx = matrix_context(t.n);
        const BracketSpec spec = spec_for(t);
        std::uniform_int_distribution<int> idx(1, t.n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = x(ctx, idx(rng), idx(rng)), g = x(ctx, idx(rng), idx(rng)), h = x(ctx, idx(rng), idx(rng));
            CHECK(jacobi_spot_check(spec, f, g, h).is_zero());
        }
        CHECK(jacobi_spot_check(spec, x(ctx, 1, 1), x(ctx, 1, 1), x(ctx, 1, 1)).is_zero());
    }
    const ContextPtr c3 = matrix_context(3);
    CHECK(jacobi_spot_check(spec_for(BDTriple{3, {{2, 1}}}), x(c3, 1, 1), x(c3, 2, 1), x(c3, 1, 3)).is_zero());
}

TEST_CASE("det is a Casimir") {
    const ContextPtr ctx = matrix_context(3);
    LaurentPoly det(ctx);
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
        LaurentPoly term = LaurentPoly::constant(ctx, p < 3 ? 1 : -1);
        for (int i = 0; i < 3; ++i) term *= x(ctx, i + 1, perms[p][i] + 1);
        det += term;
    }
    const BracketEngine engine(spec_for(BDTriple{3, {{2, 1}}}), ctx);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(engine.bracket(det, x(ctx, i, j)).is_zero());
}

TEST_CASE("Poisson-Lie property") {
    const BDTriple cg{3, {{2, 1}}};
    const BracketSpec plain = spec_for(cg);
    CHECK(poisson_lie_at_identity(plain));
    CHECK(check_multiplicativity(plain).ok);
    CHECK(check_multiplicativity(BracketSpec{2, triangular_r(), std::nullopt}).ok);

    // SL4 case 3 has a two-dimensional h_T, so V1 and V2 can be nonzero.
    const BDTriple c3{4, {{1, 3}}};
    const BracketSpec base = spec_for(c3);
    const auto h = h_T(c3).basis;
    const QMatrix j = QMatrix::from_ints({{0, 1}, {-1, 0}});
    auto with = [&](const QMatrix& v1, const QMatrix& v2, const QMatrix& v12) {
        BracketSpec s = base;
        s.twist = Twist{h, v1, v2, v12};
        return s;
    };
    const QMatrix zero(2, 2);
    const auto good = with(j, j.scaled(-1), zero);
    CHECK(poisson_lie_at_identity(good));
    CHECK(check_multiplicativity(good).ok);
    const auto off = with(zero, zero, QMatrix::identity(2));
    CHECK(poisson_lie_at_identity(off));  // symmetric V12 is invisible at the identity
    CHECK_FALSE(check_multiplicativity(off).ok);
    CHECK_FALSE(poisson_lie_at_identity(with(j, j, zero)));
    CHECK_FALSE(check_multiplicativity(with(j, j, zero)).ok);
    CHECK_FALSE(poisson_lie_at_identity(with(zero, zero, j)));
    CHECK_THROWS_AS(with(QMatrix::identity(2), zero, zero).twist->block(), InvalidInput);
}

TEST_CASE("twisted bracket satisfies Jacobi") {
    const BDTriple c3{4, {{1, 3}}};
    BracketSpec s = spec_for(c3);
    s.twist = Twist{h_T(c3).basis, QMatrix::from_ints({{0, 2}, {-2, 0}}), QMatrix::from_ints({{0, 1}, {-1, 0}}),
                    QMatrix::from_ints({{1, 3}, {-1, 2}})};
    const ContextPtr ctx = matrix_context(4);
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> idx(1, 4);
    for (int trial = 0; trial < 6; ++trial)
        CHECK(jacobi_spot_check(s, x(ctx, idx(rng), idx(rng)), x(ctx, idx(rng), idx(rng)), x(ctx, idx(rng), idx(rng))).is_zero());
}

TEST_CASE("equivariance") {
    const ContextPtr ctx = matrix_context(3);
    const std::vector<QVector> h{{1, 0, -1}};
    const TorusAction left = torus_from_basis(h, {"t"}), right = torus_from_basis(h, {"z"});
    const auto w = check_equivariance(x(ctx, 1, 1), left, right);
    REQUIRE(w);
    CHECK(w->eta == QVector{1});
    CHECK(w->zeta == QVector{1});
    CHECK_FALSE(check_equivariance(x(ctx, 1, 1) + x(ctx, 1, 2), left, right));
    const auto p7 = x(ctx, 1, 3) * x(ctx, 3, 1) - x(ctx, 2, 1) * x(ctx, 2, 3);
    const auto w7 = check_equivariance(p7, left, right);
    REQUIRE(w7);
    CHECK(w7->eta == QVector{0});
    CHECK(w7->zeta == QVector{0});
}

TEST_CASE("Jacobian rank") {
    const ContextPtr ctx = matrix_context(2);
    const QMatrix point = QMatrix::from_ints({{2, 3}, {1, 2}});
    CHECK(jacobian_independence({x(ctx, 1, 1), x(ctx, 1, 2), x(ctx, 2, 1)}, point) == 3);
    CHECK(jacobian_independence({x(ctx, 1, 1), x(ctx, 1, 1), x(ctx, 2, 1)}, point) == 2);
}
