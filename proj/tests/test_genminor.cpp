#include "doctest.h"

#include <map>
#include <random>

#include "clusterbd/genminor.hpp"
#include "clusterbd/sklyanin.hpp"

using namespace clusterbd;

namespace {

QMatrix random_rational_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

std::map<std::string, Rational> as_point(const QMatrix& x) {
    std::map<std::string, Rational> p;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) p["x" + std::to_string(i + 1) + std::to_string(j + 1)] = x(i, j);
    return p;
}

std::vector<WeylElement> all_permutations(int n) {
    std::vector<WeylElement> out;
    WeylElement w = WeylElement::identity(n);
    do out.push_back(w);
    while (std::next_permutation(w.perm.begin(), w.perm.end()));
    return out;
}

}  // namespace

TEST_CASE("Weyl elements") {
    const auto w0 = WeylElement::longest(4);
    CHECK(w0.length() == 6);
    CHECK(w0 * w0 == WeylElement::identity(4));
    const auto s1 = WeylElement::simple(3, 1), s2 = WeylElement::simple(3, 2);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);
    CHECK(s1 * s2 * s1 == WeylElement::longest(3));
    CHECK((s1 * s2).inverse() == s2 * s1);
    CHECK_THROWS_AS(WeylElement::simple(3, 3), IndexOutOfRange);
}

TEST_CASE("Gauss factorization examples") {
    const auto id = gauss_factorize(QMatrix::identity(3));
    REQUIRE(id);
    CHECK(id->lower == QMatrix::identity(3));
    CHECK(id->diagonal == QMatrix::identity(3));
    CHECK(id->upper == QMatrix::identity(3));
    CHECK_FALSE(gauss_factorize(QMatrix::from_ints({{0, 1}, {1, 0}})));
}

TEST_CASE("Gauss factors multiply back on random matrices") {
    std::mt19937 rng(12);
    int checked = 0;
    while (checked < 100) {
        const int n = 2 + checked % 4;
        const QMatrix x = random_rational_matrix(rng, n);
        const auto g = gauss_factorize(x);
        if (!g) continue;
        ++checked;
        CHECK(g->lower * g->diagonal * g->upper == x);
        for (int i = 0; i < n; ++i) {
            CHECK(g->lower(i, i) == 1);
            CHECK(g->upper(i, i) == 1);
            for (int j = i + 1; j < n; ++j) {
                CHECK(g->lower(i, j) == 0);
                CHECK(g->upper(j, i) == 0);
                CHECK(g->diagonal(i, j) == 0);
            }
        }
    }
}

TEST_CASE("generalized minor examples") {
    const ContextPtr c3 = matrix_context(3);
    const auto id = WeylElement::identity(3);
    CHECK(generalized_minor(c3, id, id, 1) == LaurentPoly::variable(c3, "x11"));
    CHECK(generalized_minor(c3, id, id, 2) == minor_polynomial(c3, {0, 1}, {0, 1}));
    const ContextPtr c2 = matrix_context(2);
    CHECK(generalized_minor(c2, WeylElement::simple(2, 1), WeylElement::identity(2), 1) == LaurentPoly::variable(c2, "x21"));
}

TEST_CASE("generalized minors agree with the Gauss factorization oracle up to a fixed sign") {
    std::mt19937 rng(31);
    for (int n = 2; n <= 3; ++n) {
        const ContextPtr ctx = matrix_context(n);
        const auto perms = all_permutations(n);
        for (const auto& u : perms)
            for (const auto& v : perms)
                for (int i = 1; i < n; ++i) {
                    const LaurentPoly minor = generalized_minor(ctx, u, v, i);
                    std::optional<Rational> sign;
                    int points = 0;
                    while (points < 50) {
                        const QMatrix x = random_rational_matrix(rng, n);
                        QMatrix moved(n, n);  // u^{-1} X v for permutation-matrix representatives
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b) moved(a, b) = x(u.perm[a], v.perm[b]);
                        const auto g = gauss_factorize(moved);
                        if (!g) continue;
                        ++points;
                        Rational delta = 1;
                        for (int k = 0; k < i; ++k) delta *= g->diagonal(k, k);
                        const Rational value = evaluate(minor, as_point(x));
                        if (delta == 0) {
                            CHECK(value == 0);
                            continue;
                        }
                        const Rational ratio = value / delta;
                        if (!sign) sign = ratio;
                        CHECK(ratio == *sign);
                    }
                    REQUIRE(sign);
                    CHECK(abs(*sign) == 1);
                }
    }
}

TEST_CASE("minors depend only on the index sets") {
    const ContextPtr ctx = matrix_context(4);
    const auto perms = all_permutations(4);
    for (const auto& u : perms)
        for (const auto& u2 : perms)
            for (int i = 1; i < 4; ++i)
                if (u.image_of_prefix(i) == u2.image_of_prefix(i))
                    CHECK(generalized_minor(ctx, u, WeylElement::longest(4), i) ==
                          generalized_minor(ctx, u2, WeylElement::longest(4), i));
}

TEST_CASE("word prefixes") {
    const DoubleWord w{2, {-1, 1, -1}};
    validate_double_word(w);
    const auto neg = word_prefix_elements(w, -1);
    CHECK(neg.u == WeylElement::identity(2));
    CHECK(neg.v == WeylElement::longest(2));
    const auto one = word_prefix_elements(w, 1);
    CHECK(one.u == WeylElement::identity(2));
    CHECK(one.v == WeylElement::identity(2));
    const auto two = word_prefix_elements(w, 2);
    CHECK(two.u == WeylElement::simple(2, 1));
    CHECK(two.v == WeylElement::identity(2));
    CHECK_THROWS_AS(word_prefix_elements(w, 3), IndexOutOfRange);
    CHECK_THROWS_AS(word_prefix_elements(w, -2), IndexOutOfRange);
    CHECK_THROWS_AS(validate_double_word(DoubleWord{2, {-1, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(validate_double_word(DoubleWord{3, {-1, -2, 1, 2, 1, -1, -2, -1}}), InvalidInput);
}

TEST_CASE("initial cluster for SL2") {
    const auto c = initial_cluster(DoubleWord{2, {-1, 1, -1}});
    const ContextPtr ctx = matrix_context(2);
    REQUIRE(c.variables.size() == 3);
    CHECK(c.variables[0] == LaurentPoly::variable(ctx, "x12"));
    CHECK(c.variables[1] == LaurentPoly::variable(ctx, "x11"));
    CHECK(c.variables[2] == LaurentPoly::variable(ctx, "x21"));
    CHECK(c.stable == std::vector<std::size_t>{0, 2});
}

TEST_CASE("initial clusters for SL3 and SL4 words") {
    const std::vector<DoubleWord> words{{3, {-2, -1, 1, -1, 2, -2, 1, -1}},
                                        {3, {-2, -1, 1, 2, 1, -1, -2, -1}},
                                        {4, {-3, -2, -1, 1, -1, 2, -2, 3, -3, 1, -1, 2, -2, 1, -1}}};
    for (const auto& w : words) {
        const auto c = initial_cluster(w);
        const std::size_t r = w.n - 1;
        CHECK(c.variables.size() == 2 * static_cast<std::size_t>(w.half_length()) + r);
        CHECK(c.stable.size() == 2 * r);
        QMatrix left(r, r), right(r, r);
        for (std::size_t k = 0; k < r; ++k) {
            const QVector a = coroot_coordinates(c.left_weights[k]), b = coroot_coordinates(c.right_weights[k]);
            for (std::size_t m = 0; m < r; ++m) {
                left(k, m) = a[m];
                right(k, m) = b[m];
            }
        }
        CHECK(rank(left) == r);
        CHECK(rank(right) == r);

        // The weights are the actual torus weights of the minors.
        std::vector<QVector> basis;
        std::vector<std::string> lp, rp;
        for (std::size_t m = 0; m < r; ++m) {
            QVector h(w.n);
            h[m] = 1;
            h[m + 1] = -1;
            basis.push_back(h);
            lp.push_back("t" + std::to_string(m + 1));
            rp.push_back("z" + std::to_string(m + 1));
        }
        const auto left_torus = torus_from_basis(basis, lp), right_torus = torus_from_basis(basis, rp);
        for (std::size_t k = 0; k < c.variables.size(); ++k) {
            const auto weights = check_equivariance(c.variables[k], left_torus, right_torus);
            REQUIRE(weights);
            CHECK(weights->eta == coroot_coordinates(c.left_weights[k]));
            CHECK(weights->zeta == coroot_coordinates(c.right_weights[k]));
        }
    }
}

TEST_CASE("standard bracket is log-canonical on the initial minors") {
    for (const auto& w : {DoubleWord{2, {-1, 1, -1}}, DoubleWord{3, {-2, -1, 1, -1, 2, -2, 1, -1}},
                          DoubleWord{3, {-2, -1, 1, 2, 1, -1, -2, -1}}}) {
        const BDTriple t{w.n, {}};
        const BracketSpec spec{w.n, assemble_r(t, solve_r0(t).particular), std::nullopt};
        const auto c = initial_cluster(w);
        const auto ex = extract_coefficient_matrix(spec, c.variables);
        CHECK(ex);
        CHECK(c.stable.size() == 2 * static_cast<std::size_t>(w.n - 1));
    }
}

TEST_CASE("double word JSON") {
    const DoubleWord w{3, {-2, -1, 1, -1, 2, -2, 1, -1}};
    const auto back = double_word_from_json(to_json(w));
    CHECK(back.entries == w.entries);
    CHECK_THROWS_AS(double_word_from_json(nlohmann::json::parse(R"({"n":2,"word":[-1,1]})")), InvalidInput);
}
