#include "clusterbd/cases.hpp"

#include <algorithm>

namespace clusterbd {

namespace {

// Printed matrices, transcribed verbatim. Corrections live in the errata lists below.

const IntRows kBtildeCg = {
    {0, -1, -1, 1, 0, 0, 0, 0},
    {1, 0, -1, -1, 0, 0, 1, 0},
    {1, 1, 0, 0, 1, -1, -1, 0},
    {-1, 1, 0, 0, 1, 1, 0, -1},
    {0, 0, -1, -1, 0, 1, 0, 1},
    {0, 0, 1, -1, -1, 0, 0, 0}};

const IntRows k3OmegaCg = {
    {0, -2, -2, -1, -1, 0, -3, -3},
    {2, 0, 0, 0, 0, 1, -2, -1},
    {2, 0, 0, 0, 0, 1, 1, -1},
    {1, 0, 0, 0, 0, 2, -1, -2},
    {1, 0, 0, 0, 0, 2, -1, 1},
    {0, -1, -1, -2, -2, 0, -3, -3},
    {3, 2, -1, 1, 1, 3, 0, 0},
    {3, 1, 1, 2, -1, 3, 0, 0}};

const IntRows k4OmegaCase2 = {
    {0, -3, -3, -1, -1, 0, 0, -2, -3, 0, -1, -2, -2, -4, -4},
    {3, 0, 0, 0, 0, 1, 2, 0, -1, 2, 1, -1, 1, -2, -2},
    {3, 0, 0, 0, 0, 1, 2, 0, 3, 2, 1, 3, 1, 2, 2},
    {1, 0, 0, 0, 0, 3, 2, 0, 1, 2, 3, 1, 3, 2, 2},
    {1, 0, 0, 0, 0, 3, 2, 0, 1, 2, -1, 1, -1, -2, -2},
    {0, -1, -1, -3, -3, 0, 0, -2, -1, 0, -3, -2, -2, -4, -4},
    {0, -2, -2, -2, -2, 0, 0, -4, -2, 0, -2, 0, -4, -4, -4},
    {2, 0, 0, 0, 0, 2, 4, 0, 2, 4, 2, 2, 2, 0, 0},
    {3, 1, -3, -1, -1, 1, 2, -2, 0, 2, 0, 1, -1, -2, -2},
    {0, -2, -2, -2, -2, 0, 0, -4, -2, 0, -2, -4, 0, -4, -4},
    {1, -1, -1, -3, 1, 3, 2, -2, 0, 2, 0, -1, 1, -2, -2},
    {2, 1, -3, -1, -1, 2, 0, -2, -1, 4, 1, 0, 0, 0, 0},
    {2, -1, -1, -3, 1, 2, 4, -2, 1, 0, -1, 0, 0, 0, 0},
    {4, 2, -2, -2, 2, 4, 4, 0, 2, 4, 2, 0, 0, 0, 0},
    {4, 2, -2, -2, 2, 4, 4, 0, 2, 4, 2, 0, 0, 0, 0}};

const IntRows kBtildeGlCase2 = {
    {0, 1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, -1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1},
    {0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 1, 0},
    {0, 0, 0, -1, 0, 0, 0, 1, -1, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, -1, 0, 1, 0, 0, 0, 0, -1, -1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 1, 0, 0, 0, -1, 0}};

const IntRows k4OmegaCase3 = {
    {0, -1, 0, -3, -2, -1, 0, 1, -2, -4, 0, -2, -2, -4, 0},
    {1, 0, -1, -2, -1, 0, -3, -2, -4, 0, -2, 2, -2, -2, -2},
    {0, 1, 0, -3, 0, -3, -2, 1, -2, 0, -2, 0, 0, 2, -2},
    {3, 2, 3, 0, 1, -2, 1, 4, 2, -2, 2, -2, 2, 2, 2},
    {2, 1, 0, -1, 0, 1, 0, 3, 0, -2, 0, 2, 2, 0, 4},
    {1, 0, 3, 2, -1, 0, 1, 2, 0, 0, 2, -2, 2, 2, 2},
    {0, 3, 2, -1, 0, -1, 0, 3, 0, 2, 2, 0, 0, 2, -2},
    {-1, 2, -1, -4, -3, -2, -3, 0, -2, -2, -2, 2, -2, -2, -2},
    {2, 4, 2, -2, 0, 0, 0, 2, 0, 0, 2, 2, 2, 2, 2},
    {4, 0, 0, 2, 2, 0, -2, 2, 0, 0, 2, 2, 2, 2, 2},
    {0, 2, 2, -2, 0, -2, -2, 2, -2, -2, 0, 0, 0, 0, 0},
    {2, -2, 0, 2, -2, 2, 0, -2, -2, -2, 0, 0, 0, 0, 0},
    {2, 2, 0, -2, -2, -2, 0, 2, -2, -2, 0, 0, 0, 0, 0},
    {4, 2, -2, -2, 0, -2, -2, 2, -2, -2, 0, 0, 0, 0, 0},
    {0, 2, 2, -2, -4, -2, 2, 2, -2, -2, 0, 0, 0, 0, 0}};

const IntRows kBtildeGlCase3 = {
    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, 0, 0},
    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, 1, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0},
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0},
    {1, -1, 0, -1, -1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0}};

const IntRows k4OmegaCase4 = {
    {0, -3, 0, -2, -1, -2, -3, -2, 0, -1, -3, -2, 0, -2, -4},
    {3, 0, 3, -1, 0, -1, 3, 0, 2, 1, 2, 1, 1, 0, 2},
    {0, -3, 0, -2, -1, -2, 1, -2, 0, -1, 1, 2, 0, -2, 0},
    {2, 1, 2, 0, 3, 0, 3, 2, 4, 1, 1, 0, -2, 2, 0},
    {1, 0, 1, -3, 0, -3, 1, 0, 2, -1, -2, -1, -1, 0, -2},
    {2, 1, 2, 0, 3, 0, 3, 2, 4, 1, 1, 0, 2, 2, 4},
    {3, -3, -1, -3, -1, -3, 0, -2, 2, 0, -1, -1, 1, -2, -2},
    {2, 0, 2, -2, 0, -2, 2, 0, 4, 2, 0, -2, 2, 0, 0},
    {0, -2, 0, -4, -2, -4, -2, -4, 0, -2, -2, 0, 0, -4, -4},
    {1, -1, 1, -1, 1, -1, 0, -2, 2, 0, -3, -3, -1, 2, -2},
    {3, -2, -1, -1, 2, -1, 1, 0, 2, 3, 0, 1, 1, 0, 2},
    {2, -1, -2, 0, 1, 0, 1, 2, 0, 3, -1, 0, 2, -2, 0},
    {0, -1, 0, 2, 1, -2, -1, -2, 0, 1, -1, -2, 0, 2, 0},
    {2, 0, 2, -2, 0, -2, 2, 0, 4, -2, 0, 2, 0, 0, 0},
    {4, -2, 0, 0, 2, -4, 2, 0, 4, 2, -2, 0, 0, 0, 0}};

const IntRows kBtildeGlCase4 = {
    {0, 1, -1, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, 0, 1, 0, -1, 1, 0, 0, 0, 0, -1, 0, -1},
    {0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1},
    {-1, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, -1, -1, 1, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, -1, 0}};

class Builder {
public:
    explicit Builder(int n) : n_(n), ctx_(matrix_context(n)), adj_(adjugate_polynomials(n)) {}

    const ContextPtr& ctx() const { return ctx_; }
    // 1-based indices throughout.
    LaurentPoly x(int i, int j) const { return LaurentPoly::variable(ctx_, "x" + std::to_string(i) + std::to_string(j)); }
    LaurentPoly adj(int i, int j) const { return adj_.at(i - 1).at(j - 1); }
    LaurentPoly num(long c) const { return LaurentPoly::constant(ctx_, c); }

    static LaurentPoly det2(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c, const LaurentPoly& d) {
        return a * d - b * c;
    }
    static LaurentPoly det3(const std::vector<std::vector<LaurentPoly>>& m) {
        return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
               m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
    }
    // |x_ab x_ad; x_cb x_cd|
    LaurentPoly xm(int a, int b, int c, int d) const { return det2(x(a, b), x(a, d), x(c, b), x(c, d)); }

    LaurentPoly det() const { return minor_polynomial(ctx_, iota(), iota()); }

private:
    std::vector<int> iota() const {
        std::vector<int> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    int n_;
    ContextPtr ctx_;
    std::vector<std::vector<LaurentPoly>> adj_;
};

RTensor diagonal_wedges(int n, const std::vector<std::pair<std::pair<int, int>, long>>& terms, const Rational& scale) {
    RTensor out(n);
    for (const auto& [idx, c] : terms) {
        const int a = idx.first - 1, b = idx.second - 1;
        out = out + RTensor::wedge(n, a, a, b, b, scale * c);
    }
    return out;
}

std::vector<QVector> pairs_to_vectors(const std::vector<std::vector<long>>& rows) {
    std::vector<QVector> out;
    for (const auto& r : rows) {
        QVector v;
        for (long e : r) v.push_back(e);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVector> scalar_weights(const std::vector<long>& values) {
    std::vector<QVector> out;
    for (long e : values) out.push_back(QVector{e});
    return out;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

void finish_bd(CaseSpec& c) {
    c.r0 = solve_r0(BDTriple{c.n, {}}).particular + c.r0_offset;
    c.r = assemble_r(c.triple, c.r0);
    c.names = numbered("P", c.basis.size());
}

IntRows drop_last_column(IntRows rows) {
    for (auto& r : rows) r.pop_back();
    return rows;
}

CaseSpec sl3_cg() {
    CaseSpec c;
    c.name = "sl3-cg";
    c.n = 3;
    c.triple = BDTriple{3, {{2, 1}}};
    c.r0_offset = diagonal_wedges(3, {{{1, 3}, 1}, {{1, 2}, -1}, {{2, 3}, -1}}, make_rational(1, 6));
    const Builder b(3);
    c.ctx = b.ctx();
    c.basis = {b.x(1, 1),
               b.x(1, 3),
               b.x(2, 1),
               -b.adj(2, 3),
               -b.adj(3, 1),
               -b.adj(3, 3),
               b.x(1, 3) * b.x(3, 1) - b.x(2, 1) * b.x(2, 3),
               b.adj(1, 3) * b.adj(3, 1) - b.adj(2, 1) * b.adj(2, 3)};
    c.stable = {6, 7};
    c.sign_flips = {4, 5};
    c.btilde = ExtExchangeMatrix(kBtildeCg, 2);
    IntRows gl = kBtildeCg;
    const std::vector<long> extra{0, 0, 0, 0, -1, 1};
    for (std::size_t i = 0; i < gl.size(); ++i) gl[i].push_back(extra[i]);
    c.btilde_gl = ExtExchangeMatrix(gl, 3);
    c.omega_printed = k3OmegaCg;
    c.omega_scalar = 3;
    c.omega_errata = {{1, 6, -2, 1}, {6, 1, 2, -1}, {2, 6, 1, -2}, {6, 2, -1, 2}};
    c.d_sign = -1;
    c.stated_d_sign = -1;
    c.torus_basis = {{1, 0, -1}};
    c.left_params = {"t"};
    c.right_params = {"z"};
    c.weights = WeightAssignment{scalar_weights({1, 1, 0, 1, -1, 1, 0, 0}), scalar_weights({1, -1, 1, 0, 1, 1, 0, 0})};
    finish_bd(c);
    return c;
}

CaseSpec sl4_case2() {
    CaseSpec c;
    c.name = "sl4-case2";
    c.n = 4;
    c.triple = BDTriple{4, {{2, 1}, {3, 2}}};
    c.r0_offset = diagonal_wedges(4, {{{1, 4}, 1}, {{1, 2}, -1}, {{2, 3}, -1}, {{3, 4}, -1}}, make_rational(1, 4));
    const Builder b(4);
    c.ctx = b.ctx();
    auto x = [&](int i, int j) { return b.x(i, j); };
    auto h = [&](int i, int j) { return b.adj(i, j); };
    LaurentPoly p13 = b.num(0), p14 = b.num(0), p15 = b.num(0);
    for (int i = 1; i <= 3; ++i) {
        p13 += h(i + 1, 1) * b.xm(1, i, 2, 4);
        p14 -= h(i, 4) * Builder::det3({{x(2, 1), x(2, i + 1), x(1, 4)},
                                         {x(3, 1), x(3, i + 1), x(2, 4)},
                                         {x(4, 1), x(4, i + 1), x(3, 4)}});
        p15 -= h(i + 1, 1) * Builder::det3({{x(2, 1), x(1, i), x(1, 4)},
                                             {x(3, 1), x(2, i), x(2, 4)},
                                             {x(4, 1), x(3, i), x(3, 4)}});
    }
    c.basis = {-x(2, 1),
               x(3, 1),
               x(2, 4),
               h(3, 1),
               h(2, 4),
               h(3, 4),
               b.xm(1, 1, 2, 4),
               b.xm(2, 1, 3, 4),
               Builder::det2(x(2, 1), x(1, 4), x(3, 1), x(2, 4)),
               b.xm(2, 1, 3, 2),
               -Builder::det2(h(3, 1), h(2, 4), h(4, 1), h(3, 4)),
               -Builder::det3({{x(2, 1), x(2, 2), x(1, 4)}, {x(3, 1), x(3, 2), x(2, 4)}, {x(4, 1), x(4, 2), x(3, 4)}}),
               p13,
               p14,
               p15};
    c.stable = {13, 14};
    c.btilde_gl = ExtExchangeMatrix(kBtildeGlCase2, 3);
    c.btilde = ExtExchangeMatrix(drop_last_column(kBtildeGlCase2), 2);
    c.omega_printed = k4OmegaCase2;
    c.omega_scalar = 4;
    c.d_sign = 1;
    c.stated_d_sign = 1;
    c.torus_basis = {{3, 1, -1, -3}};
    c.left_params = {"t"};
    c.right_params = {"z"};
    c.weights = WeightAssignment{scalar_weights({1, -1, 1, -3, 3, 3, 4, 0, 2, 0, 0, -1, 1, 2, -2}),
                                 scalar_weights({3, 3, -3, 1, -1, 1, 0, 0, 0, 4, 2, 1, -1, -2, 2})};
    finish_bd(c);
    return c;
}

CaseSpec sl4_case3() {
    CaseSpec c;
    c.name = "sl4-case3";
    c.n = 4;
    c.triple = BDTriple{4, {{1, 3}}};
    c.r0_offset = diagonal_wedges(4, {{{1, 2}, 1}, {{2, 3}, -1}, {{3, 4}, -1}, {{2, 4}, 2}, {{1, 4}, -1}}, make_rational(1, 4));
    const Builder b(4);
    c.ctx = b.ctx();
    auto x = [&](int i, int j) { return b.x(i, j); };
    auto h = [&](int i, int j) { return b.adj(i, j); };
    c.basis = {x(1, 2),          x(1, 3),          x(4, 1),          -x(4, 2),         -h(1, 2),
               -h(1, 3),         h(4, 1),          h(4, 2),          -b.xm(3, 2, 4, 3), b.xm(1, 3, 4, 4),
               -b.xm(1, 2, 4, 3), b.xm(1, 3, 2, 4), b.xm(3, 1, 4, 2), Builder::det2(x(1, 3), x(1, 4), x(4, 1), x(4, 2)),
               Builder::det2(h(1, 3), h(1, 4), h(4, 1), h(4, 2))};
    c.stable = {11, 12, 13, 14};
    c.btilde_gl = ExtExchangeMatrix(kBtildeGlCase3, 5);
    c.btilde = ExtExchangeMatrix(drop_last_column(kBtildeGlCase3), 4);
    c.omega_printed = k4OmegaCase3;
    c.omega_scalar = 4;
    c.d_sign = 1;
    c.stated_d_sign = -1;
    c.torus_basis = {{1, 0, 0, -1}, {0, 1, -1, 0}};
    c.left_params = {"t", "w"};
    c.right_params = {"z", "v"};
    c.weights = WeightAssignment{
        pairs_to_vectors({{1, 0}, {1, 0}, {-1, 0}, {-1, 0}, {0, -1}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}, {0, 0}, {0, 0},
                          {1, 1}, {-1, -1}, {0, 0}, {0, 0}}),
        pairs_to_vectors({{0, 1}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {-1, 0}, {1, 0}, {1, 0}, {0, 0}, {-1, -1}, {0, 0},
                          {-1, -1}, {1, 1}, {0, 0}, {0, 0}})};
    finish_bd(c);
    return c;
}

CaseSpec sl4_case4() {
    CaseSpec c;
    c.name = "sl4-case4";
    c.n = 4;
    c.triple = BDTriple{4, {{1, 2}}};
    c.r0_offset = diagonal_wedges(4, {{{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{1, 4}, -1}}, make_rational(1, 4));
    const Builder b(4);
    c.ctx = b.ctx();
    auto x = [&](int i, int j) { return b.x(i, j); };
    auto h = [&](int i, int j) { return b.adj(i, j); };
    const LaurentPoly p11 = x(4, 1) * b.xm(1, 3, 3, 4) - x(4, 2) * b.xm(1, 2, 3, 4);
    const LaurentPoly p15 = h(4, 1) * (x(4, 1) * b.xm(1, 3, 2, 4) - x(4, 2) * b.xm(1, 2, 2, 4)) +
                            h(4, 2) * (x(4, 1) * b.xm(1, 3, 3, 4) - x(4, 2) * b.xm(1, 2, 3, 4));
    c.basis = {-x(1, 2),
               x(4, 2),
               -x(4, 1),
               -h(4, 1),
               h(4, 2),
               -h(1, 2),
               x(1, 2) * x(4, 2) - x(1, 3) * x(4, 1),
               b.xm(1, 2, 4, 3),
               b.xm(1, 1, 4, 2),
               b.xm(1, 2, 3, 3),
               p11,
               x(1, 4),
               h(1, 4),
               b.xm(3, 1, 4, 2),
               p15};
    c.notes.push_back("P14 printed as |x21 x23; x31 x33|, which is not log-canonical; |x31 x32; x41 x42| has the "
                      "printed weights and reproduces row 14 of the coefficient matrix");
    c.stable = {11, 12, 13, 14};
    c.sign_flips = {9, 10};
    c.btilde_gl = ExtExchangeMatrix(kBtildeGlCase4, 5);
    c.btilde = ExtExchangeMatrix(drop_last_column(kBtildeGlCase4), 4);
    c.omega_printed = k4OmegaCase4;
    c.omega_scalar = 4;
    c.omega_errata = {{13, 12, 0, -2}};
    c.d_sign = 1;
    c.stated_d_sign = 1;
    c.torus_basis = {{1, 0, -1, 0}, {0, 1, 2, -3}};
    c.left_params = {"t", "w"};
    c.right_params = {"z", "v"};
    c.weights = WeightAssignment{
        pairs_to_vectors({{1, 0}, {0, -3}, {0, -3}, {-1, 0}, {0, -1}, {0, -1}, {1, -3}, {1, -3}, {1, -3}, {0, 2}, {0, -1},
                          {1, 0}, {0, 3}, {-1, -1}, {0, -2}}),
        pairs_to_vectors({{0, 1}, {0, 1}, {1, 0}, {0, 3}, {0, 3}, {-1, 0}, {0, 2}, {-1, 3}, {1, 1}, {-1, 3}, {0, -1},
                          {0, -3}, {-1, 0}, {1, 1}, {0, 2}})};
    finish_bd(c);
    return c;
}

CaseSpec sl2_triangular() {
    CaseSpec c;
    c.name = "sl2-triangular";
    c.kind = CaseKind::Triangular;
    c.n = 2;
    c.r = RTensor::wedge(2, 0, 0, 0, 1) - RTensor::wedge(2, 1, 1, 0, 1);
    const Builder b(2);
    c.ctx = b.ctx();
    const LaurentPoly inv21 = LaurentPoly::variable(c.ctx, "x21", -1);
    const LaurentPoly y1 = b.x(1, 1), y2 = b.x(2, 1), y3 = b.x(1, 1) - b.x(2, 2);
    c.named = {{"y1", y1}, {"y2", y2}, {"y3", y3}, {"z1", y1}, {"z2", -inv21}, {"z3", y3 * inv21}};
    c.basis = {y1, y2, y3};
    c.names = {"y1", "y2", "y3"};
    const LaurentPoly zero = b.num(0);
    c.expected_brackets = {{"y1", "y2", y2 * y2},  {"y1", "y3", y2 * y3}, {"y2", "y3", zero},
                           {"z1", "z2", b.num(1)}, {"z1", "z3", zero},    {"z2", "z3", zero}};
    return c;
}

CaseSpec trivial(int n) {
    CaseSpec c;
    c.name = "trivial-sl" + std::to_string(n);
    c.kind = CaseKind::Trivial;
    c.n = n;
    c.triple = BDTriple{n, {}};
    c.r0_offset = RTensor(n);
    c.word = n == 2 ? DoubleWord{2, {-1, 1, -1}} : DoubleWord{3, {-2, -1, 1, -1, 2, -2, 1, -1}};
    const InitialCluster ic = initial_cluster(*c.word);
    c.ctx = matrix_context(n);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < ic.variables.size(); ++i)
        if (std::find(ic.stable.begin(), ic.stable.end(), i) == ic.stable.end()) order.push_back(i);
    const std::size_t mutable_count = order.size();
    order.insert(order.end(), ic.stable.begin(), ic.stable.end());
    WeightAssignment w;
    for (std::size_t i : order) {
        c.basis.push_back(ic.variables[i]);
        w.eta.push_back(coroot_coordinates(ic.left_weights[i]));
        w.zeta.push_back(coroot_coordinates(ic.right_weights[i]));
    }
    for (std::size_t i = mutable_count; i < order.size(); ++i) c.stable.push_back(i);
    c.weights = std::move(w);
    for (int m = 0; m + 1 < n; ++m) {
        QVector h(n);
        h[m] = 1;
        h[m + 1] = -1;
        c.torus_basis.push_back(h);
        c.left_params.push_back("t" + std::to_string(m + 1));
        c.right_params.push_back("z" + std::to_string(m + 1));
    }
    if (n == 2) {
        // Extended cluster (x11 | x12, x21); on GL_2 the exchange gives x22.
        c.btilde = ExtExchangeMatrix({{0, 1, 1}}, 2);
        c.btilde_gl = ExtExchangeMatrix({{0, 1, 1, -1}}, 3);
        c.d_sign = 1;
        c.stated_d_sign = 1;
    }
    finish_bd(c);
    return c;
}

}  // namespace

std::vector<std::vector<LaurentPoly>> adjugate_polynomials(int n) {
    if (n < 2) throw InvalidInput("adjugate needs n >= 2");
    const ContextPtr ctx = matrix_context(n);
    std::vector<std::vector<LaurentPoly>> out(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            const LaurentPoly m = minor_polynomial(ctx, rows, cols);
            out[i][j] = (i + j) % 2 ? -m : m;
        }
    }
    return out;
}

LaurentPoly CaseSpec::det() const { return Builder(n).det(); }

std::optional<QMatrix> CaseSpec::omega_expected() const {
    if (!omega_printed) return std::nullopt;
    IntRows rows = *omega_printed;
    for (const auto& e : omega_errata) rows.at(e.row).at(e.col) = e.corrected;
    return QMatrix::from_ints(rows).scaled(make_rational(1, omega_scalar));
}

Seed CaseSpec::gl_seed() const {
    if (!btilde_gl) throw InvalidInput(name + ": no exchange matrix on GL_n");
    Seed s{*btilde_gl, names, basis};
    for (std::size_t i : sign_flips) s.variables.at(i) = -s.variables.at(i);
    s.names.push_back("det");
    s.variables.push_back(det());
    return s;
}

LaurentPoly CaseSpec::lookup(const std::string& key) const {
    if (auto it = named.find(key); it != named.end()) return it->second;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == key) return basis[i];
    if (key == "det") return det();
    throw UnknownVariable(key);
}

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names{"sl3-cg",         "sl4-case2",   "sl4-case3",  "sl4-case4",
                                                "sl2-triangular", "trivial-sl2", "trivial-sl3"};
    return names;
}

CaseSpec load_case(const std::string& name) {
    if (name == "sl3-cg") return sl3_cg();
    if (name == "sl4-case2") return sl4_case2();
    if (name == "sl4-case3") return sl4_case3();
    if (name == "sl4-case4") return sl4_case4();
    if (name == "sl2-triangular") return sl2_triangular();
    if (name == "trivial-sl2") return trivial(2);
    if (name == "trivial-sl3") return trivial(3);
    throw InvalidInput("unknown case '" + name + "'");
}

}  // namespace clusterbd
