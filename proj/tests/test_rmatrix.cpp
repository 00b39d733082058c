#include "doctest.h"

#include <random>

#include "clusterbd/rmatrix.hpp"

using namespace clusterbd;

namespace {

// Dense brute-force [[r,r]] using explicit n x n matrices for each leg.
using Mat = std::vector<Rational>;

Mat unit_matrix(int n, int a, int b) {
    Mat m(n * n);
    m[a * n + b] = 1;
    return m;
}

Mat mul(int n, const Mat& x, const Mat& y) {
    Mat z(n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (x[i * n + k] != 0)
                for (int j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
    return z;
}

Mat commutator(int n, const Mat& x, const Mat& y) {
    Mat a = mul(n, x, y), b = mul(n, y, x);
    for (int i = 0; i < n * n; ++i) a[i] -= b[i];
    return a;
}

// Triple tensor as a dense array of size n^6 indexed by the three leg entries.
std::vector<Rational> brute_cybe(const RTensor& r) {
    const int n = r.n(), n2 = n * n;
    std::vector<Rational> out(static_cast<std::size_t>(n2) * n2 * n2);
    auto add = [&](const Mat& p, const Mat& q, const Mat& s, const Rational& c) {
        for (int i = 0; i < n2; ++i)
            if (p[i] != 0)
                for (int j = 0; j < n2; ++j)
                    if (q[j] != 0)
                        for (int k = 0; k < n2; ++k)
                            if (s[k] != 0) out[(static_cast<std::size_t>(i) * n2 + j) * n2 + k] += c * p[i] * q[j] * s[k];
    };
    for (const auto& [x, u] : r.terms())
        for (const auto& [y, v] : r.terms()) {
            const Mat X = unit_matrix(n, x[0], x[1]), Y = unit_matrix(n, x[2], x[3]);
            const Mat Xp = unit_matrix(n, y[0], y[1]), Yp = unit_matrix(n, y[2], y[3]);
            add(commutator(n, X, Xp), Y, Yp, u * v);
            add(X, commutator(n, Y, Xp), Yp, u * v);
            add(X, Xp, commutator(n, Y, Yp), u * v);
        }
    return out;
}

std::vector<Rational> dense(const RTensor3& t) {
    const int n = t.n(), n2 = n * n;
    std::vector<Rational> out(static_cast<std::size_t>(n2) * n2 * n2);
    for (const auto& [k, v] : t.terms())
        out[(static_cast<std::size_t>(k[0] * n + k[1]) * n2 + (k[2] * n + k[3])) * n2 + (k[4] * n + k[5])] = v;
    return out;
}

RTensor diag_wedge(int n, int i, int j, const Rational& c) { return RTensor::wedge(n, i, i, j, j, c); }

RTensor standard_r(int n) {
    const BDTriple t{n, {}};
    return assemble_r(t, solve_r0(t).particular);
}

}  // namespace

TEST_CASE("casimir") {
    const auto c2 = casimir(2);
    // t0 = (1/2) h (x) h with h = e11 - e22
    RTensor expected(2);
    expected.add({0, 0, 0, 0}, make_rational(1, 2));
    expected.add({1, 1, 1, 1}, make_rational(1, 2));
    expected.add({0, 0, 1, 1}, make_rational(-1, 2));
    expected.add({1, 1, 0, 0}, make_rational(-1, 2));
    CHECK(c2.t0 == expected);
    for (int n = 2; n <= 4; ++n) CHECK(casimir(n).t.swapped() == casimir(n).t);
    CHECK(c2.t.coeff({0, 1, 1, 0}) == 1);
}

TEST_CASE("r0 for the Cremmer-Gervais triple of SL3") {
    const BDTriple t{3, {{2, 1}}};
    const auto sol = solve_r0(t);
    CHECK(sol.freedom.empty());
    const RTensor offset = sol.particular - casimir(3).t0.scaled(make_rational(1, 2));
    const Rational s = make_rational(1, 6);
    CHECK(offset == diag_wedge(3, 0, 2, s) + diag_wedge(3, 0, 1, -s) + diag_wedge(3, 1, 2, -s));
}

TEST_CASE("r0 for the SL4 triples") {
    const Rational q = make_rational(1, 4);
    const RTensor half = casimir(4).t0.scaled(make_rational(1, 2));
    {
        const auto sol = solve_r0(BDTriple{4, {{2, 1}, {3, 2}}});
        CHECK(sol.freedom.empty());
        CHECK(sol.particular - half ==
              diag_wedge(4, 0, 3, q) + diag_wedge(4, 0, 1, -q) + diag_wedge(4, 1, 2, -q) + diag_wedge(4, 2, 3, -q));
    }
    for (const BDTriple& t : {BDTriple{4, {{1, 3}}}, BDTriple{4, {{1, 2}}}}) {
        const auto sol = solve_r0(t);
        CHECK(sol.freedom.size() == 1);
        CHECK(r0_violation(t, sol.particular).empty());
        for (const auto& f : sol.freedom) CHECK(f.swapped() == f.scaled(-1));
    }
}

TEST_CASE("r0 freedom for trivial triples") {
    CHECK(solve_r0(BDTriple{2, {}}).freedom.size() == 0);
    CHECK(solve_r0(BDTriple{3, {}}).freedom.size() == 1);
    CHECK(solve_r0(BDTriple{4, {}}).freedom.size() == 3);
}

TEST_CASE("assembly") {
    const BDTriple t2{2, {}};
    const auto r0 = solve_r0(t2).particular;
    CHECK(assemble_r(t2, r0) == r0 + RTensor::unit(2, 1, 0, 0, 1));

    const BDTriple cg{3, {{2, 1}}};
    const RTensor r = assemble_r(cg, solve_r0(cg).particular);
    CHECK(r.coeff({2, 1, 0, 1}) == 1);   // e32 (x) e12
    CHECK(r.coeff({0, 1, 2, 1}) == -1);  // - e12 (x) e32

    const BDTriple c2{4, {{2, 1}, {3, 2}}};
    const RTensor triangular = assemble_r(c2, solve_r0(c2).particular) - solve_r0(c2).particular;
    int wedges = 0;
    for (const auto& [k, v] : triangular.terms())
        if (v == 1 && triangular.coeff({k[2], k[3], k[0], k[1]}) == -1) ++wedges;
    CHECK(wedges == 4);

    CHECK_THROWS_AS(assemble_r(cg, RTensor(3)), InvalidInput);
}

TEST_CASE("CYBE and unitarity") {
    const auto zero = check_cybe_unitarity(RTensor(3));
    CHECK(zero.cybe);
    CHECK_FALSE(zero.unitarity);

    const RTensor r2 = standard_r(2);
    CHECK(check_cybe_unitarity(r2).ok());
    CHECK(dense(cybe_tensor(r2)) == brute_cybe(r2));

    const BDTriple cg{3, {{2, 1}}};
    const RTensor r3 = assemble_r(cg, solve_r0(cg).particular);
    CHECK(check_cybe_unitarity(r3).ok());
    RTensor perturbed = r3;
    perturbed.add({2, 1, 0, 1}, 1);
    CHECK_FALSE(check_cybe_unitarity(perturbed).cybe);
    CHECK(dense(cybe_tensor(perturbed)) == brute_cybe(perturbed));
}

TEST_CASE("every small triple gives an r-matrix for every r0") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int n = 2; n <= 4; ++n) {
        // All valid triples, via partial injections of simple roots.
        std::vector<int> choice(n - 1, 0);
        while (true) {
            BDTriple t{n, {}};
            for (int k = 0; k < n - 1; ++k)
                if (choice[k]) t.gamma[k + 1] = choice[k];
            if (t.gamma.size() == t.gamma2().size() && validate_bd_triple(t)) {
                bool distinct = true;
                auto g2 = t.gamma2();
                for (std::size_t i = 1; i < g2.size(); ++i) distinct = distinct && g2[i] != g2[i - 1];
                if (distinct) {
                    CAPTURE(to_json(t).dump());
                    const auto sol = solve_r0(t);
                    CHECK(sol.freedom.size() == k_T(t) * (k_T(t) == 0 ? 0 : k_T(t) - 1) / 2);
                    const RTensor r = assemble_r(t, sol.particular);
                    CHECK(check_cybe_unitarity(r).ok());
                    CHECK(check_ad_invariance(r, h_T(t)).ok());
                    for (int s = 0; s < 3 && !sol.freedom.empty(); ++s) {
                        RTensor shifted = sol.particular;
                        for (const auto& f : sol.freedom) shifted = shifted + f.scaled(coeff(rng));
                        const RTensor rs = assemble_r(t, shifted);
                        CHECK(check_cybe_unitarity(rs).ok());
                        CHECK(cybe_tensor(rs).terms() == cybe_tensor(r).terms());
                    }
                }
            }
            int pos = 0;
            while (pos < n - 1 && ++choice[pos] > n - 1) choice[pos++] = 0;
            if (pos == n - 1) break;
        }
    }
}

TEST_CASE("Ad-invariance") {
    const BDTriple cg{3, {{2, 1}}};
    const auto sol = solve_r0(cg);
    CHECK(check_ad_invariance(sol.particular, CartanSubspace{{QVector{1, 0, -1}, QVector{0, 1, -1}}}).ok());
    const RTensor r = assemble_r(cg, sol.particular);
    CHECK(check_ad_invariance(r, h_T(cg)).ok());
    const auto full = check_ad_invariance(r, h_T(BDTriple{3, {}}));
    CHECK_FALSE(full.ok());
    for (const auto& k : full.violations) CHECK((k == RTensor::Key{2, 1, 0, 1} || k == RTensor::Key{0, 1, 2, 1}));
}

TEST_CASE("swap is an involution and JSON round-trips") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> idx(0, 3), c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        RTensor r(4);
        for (int k = 0; k < 10; ++k) r.add({idx(rng), idx(rng), idx(rng), idx(rng)}, make_rational(c(rng), 3));
        CHECK(r.swapped().swapped() == r);
        CHECK(rtensor_from_json(to_json(r)) == r);
        CHECK(to_json(rtensor_from_json(to_json(r))).dump() == to_json(r).dump());
    }
    CHECK_THROWS_AS(RTensor::unit(2, 0, 0, 2, 0), IndexOutOfRange);
}
