#include "clusterbd/sklyanin.hpp"

#include <algorithm>
#include <set>

#include "clusterbd/errors.hpp"
#include "clusterbd/parallel.hpp"

namespace clusterbd {

namespace {

std::string entry_name(const std::string& prefix, int i, int j) {
    return prefix + std::to_string(i + 1) + std::to_string(j + 1);
}

LaurentPoly sum_of(const ContextPtr& ctx, const std::vector<LaurentPoly>& parts) {
    LaurentPoly out(ctx);
    for (const auto& p : parts) out += p;
    return out;
}

}  // namespace

QMatrix Twist::block() const {
    const std::size_t k = h_basis.size();
    for (const QMatrix* m : {&v1, &v2, &v12})
        if (m->rows() != k || m->cols() != k) throw InvalidInput("twist blocks must be k_T x k_T");
    if (!v1.is_skew_symmetric() || !v2.is_skew_symmetric()) throw InvalidInput("V1 and V2 must be skew-symmetric");
    QMatrix v(2 * k, 2 * k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
            v(p, q) = v1(p, q);
            v(p, k + q) = v12(p, q);
            v(k + p, q) = -v12(q, p);
            v(k + p, k + q) = v2(p, q);
        }
    return v;
}

BracketEngine::BracketEngine(BracketSpec spec, ContextPtr ctx) : spec_(std::move(spec)), ctx_(std::move(ctx)) {
    const int n = spec_.n;
    if (spec_.r.n() != n) throw InvalidInput("r-matrix size differs from n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) var_.push_back(ctx_->index(entry_name("x", i, j)));
    std::set<std::size_t> rows;
    for (const auto& [k, v] : spec_.r.terms()) rows.insert(static_cast<std::size_t>(k[0]) * n + k[1]);
    rows_.assign(rows.begin(), rows.end());
    if (spec_.twist) {
        v_ = spec_.twist->block();
        for (const auto& h : spec_.twist->h_basis)
            if (h.size() != static_cast<std::size_t>(n)) throw InvalidInput("twist basis element has wrong size");
    }
}

FieldCache BracketEngine::fields(const LaurentPoly& f) const {
    if (!f.context() || !(*f.context() == *ctx_)) throw ContextMismatch();
    const int n = spec_.n;
    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    std::vector<LaurentPoly> d(n2);
    for (std::size_t k = 0; k < n2; ++k) d[k] = partial_derivative(f, var_[k]);
    auto times_var = [&](const LaurentPoly& p, std::size_t k) {
        Exponents e(ctx_->size(), 0);
        e[var_[k]] = 1;
        return p.times_monomial(e);
    };
    FieldCache fc;
    fc.R.resize(n2, LaurentPoly(ctx_));
    fc.L.resize(n2, LaurentPoly(ctx_));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<LaurentPoly> r_parts, l_parts;
            for (int j = 0; j < n; ++j)
                if (!d[a * n + j].is_zero()) r_parts.push_back(times_var(d[a * n + j], b * n + j));
            for (int i = 0; i < n; ++i)
                if (!d[i * n + b].is_zero()) l_parts.push_back(times_var(d[i * n + b], i * n + a));
            fc.R[a * n + b] = sum_of(ctx_, r_parts);
            fc.L[a * n + b] = sum_of(ctx_, l_parts);
        }
    fc.Rr.resize(n2, LaurentPoly(ctx_));
    fc.Lr.resize(n2, LaurentPoly(ctx_));
    for (const auto& [k, v] : spec_.r.terms()) {
        const std::size_t ab = static_cast<std::size_t>(k[0]) * n + k[1], cd = static_cast<std::size_t>(k[2]) * n + k[3];
        fc.Rr[ab] += fc.R[cd] * v;
        fc.Lr[ab] += fc.L[cd] * v;
    }
    if (spec_.twist) {
        for (const auto& h : spec_.twist->h_basis) {
            LaurentPoly ar(ctx_), al(ctx_);
            for (int a = 0; a < n; ++a) {
                if (h[a] == 0) continue;
                ar += fc.R[a * n + a] * h[a];
                al += fc.L[a * n + a] * h[a];
            }
            fc.aR.push_back(std::move(ar));
            fc.aL.push_back(std::move(al));
        }
    }
    return fc;
}

LaurentPoly BracketEngine::bracket(const FieldCache& f, const FieldCache& g) const {
    LaurentPoly out(ctx_);
    for (std::size_t ab : rows_) {
        if (!f.R[ab].is_zero() && !g.Rr[ab].is_zero()) out += f.R[ab] * g.Rr[ab];
        if (!f.L[ab].is_zero() && !g.Lr[ab].is_zero()) out -= f.L[ab] * g.Lr[ab];
    }
    if (spec_.twist) {
        const std::size_t k = f.aR.size();
        auto component = [k](const FieldCache& c, std::size_t p) -> const LaurentPoly& {
            return p < k ? c.aR[p] : c.aL[p - k];
        };
        for (std::size_t p = 0; p < 2 * k; ++p)
            for (std::size_t q = 0; q < 2 * k; ++q)
                if (v_(p, q) != 0) out += component(g, p) * component(f, q) * v_(p, q);
    }
    return out;
}

LaurentPoly BracketEngine::bracket(const LaurentPoly& f, const LaurentPoly& g) const {
    return bracket(fields(f), fields(g));
}

LaurentPoly sklyanin_bracket(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g) {
    if (!f.context() || !g.context() || !(*f.context() == *g.context())) throw ContextMismatch();
    return BracketEngine(spec, f.context()).bracket(f, g);
}

Extraction extract_coefficient_matrix(const BracketSpec& spec, const std::vector<LaurentPoly>& basis) {
    Extraction out;
    if (basis.empty()) {
        out.omega = QMatrix();
        return out;
    }
    for (const auto& p : basis) {
        if (p.is_zero()) throw InvalidInput("basis element is zero");
        if (!(*p.context() == *basis.front().context())) throw ContextMismatch();
    }
    const BracketEngine engine(spec, basis.front().context());
    const std::size_t m = basis.size();
    std::vector<FieldCache> cache(m);
    parallel_for(m, [&](std::size_t i) { cache[i] = engine.fields(basis[i]); });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    struct PairResult {
        LaurentPoly bracket;
        std::optional<LaurentPoly> quotient;
    };
    std::vector<PairResult> results(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        PairResult& res = results[p];
        res.bracket = engine.bracket(cache[i], cache[j]);
        res.quotient = res.bracket.is_zero() ? std::optional<LaurentPoly>(res.bracket)
                                             : exact_divide(res.bracket, basis[i] * basis[j]);
    });

    QMatrix omega(m, m);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const auto& res = results[p];
        if (!res.quotient || !res.quotient->is_constant()) {
            out.bad_i = i;
            out.bad_j = j;
            out.bracket = res.bracket;
            out.residue = res.quotient;
            return out;
        }
        const Rational w = res.quotient->is_zero() ? Rational(0) : res.quotient->constant_value();
        omega(i, j) = w;
        omega(j, i) = -w;
    }
    out.omega = std::move(omega);
    return out;
}

namespace {

std::vector<LaurentPoly> coordinate_brackets(const BracketSpec& spec, const ContextPtr& ctx) {
    const int n = spec.n;
    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    const BracketEngine engine(spec, ctx);
    std::vector<FieldCache> cache(n2);
    for (std::size_t k = 0; k < n2; ++k)
        cache[k] = engine.fields(LaurentPoly::variable(ctx, entry_name("x", static_cast<int>(k / n), static_cast<int>(k % n))));
    std::vector<LaurentPoly> out(n2 * n2);
    parallel_for(n2 * n2, [&](std::size_t p) { out[p] = engine.bracket(cache[p / n2], cache[p % n2]); });
    return out;
}

}  // namespace

bool poisson_lie_at_identity(const BracketSpec& spec) {
    const ContextPtr ctx = matrix_context(spec.n);
    std::vector<Rational> identity(ctx->size(), 0);
    for (int i = 0; i < spec.n; ++i) identity[ctx->index(entry_name("x", i, i))] = 1;
    for (const auto& b : coordinate_brackets(spec, ctx))
        if (evaluate(b, identity) != 0) return false;
    return true;
}

MultiplicativityReport check_multiplicativity(const BracketSpec& spec) {
    const int n = spec.n;
    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    const ContextPtr small = matrix_context(n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) names.push_back(entry_name("x", i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) names.push_back(entry_name("y", i, j));
    const ContextPtr big = make_context(names);
    auto x = [&](int i, int j) { return LaurentPoly::variable(big, entry_name("x", i, j)); };
    auto y = [&](int i, int j) { return LaurentPoly::variable(big, entry_name("y", i, j)); };

    const auto brackets = coordinate_brackets(spec, small);
    std::map<std::string, LaurentPoly> to_x, to_y, to_z;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string name = entry_name("x", i, j);
            to_x.emplace(name, x(i, j));
            to_y.emplace(name, y(i, j));
            LaurentPoly z(big);
            for (int m = 0; m < n; ++m) z += x(i, m) * y(m, j);
            to_z.emplace(name, z);
        }
    std::vector<LaurentPoly> bx(n2 * n2), by(n2 * n2);
    for (std::size_t p = 0; p < n2 * n2; ++p) {
        bx[p] = substitute(brackets[p], to_x);
        by[p] = substitute(brackets[p], to_y);
    }
    std::vector<std::string> failures(n2 * n2);
    parallel_for(n2 * n2, [&](std::size_t p) {
        const int i = static_cast<int>(p / n2 / n), j = static_cast<int>(p / n2 % n);
        const int k = static_cast<int>(p % n2 / n), l = static_cast<int>(p % n2 % n);
        LaurentPoly lhs(big);
        for (int m = 0; m < n; ++m)
            for (int q = 0; q < n; ++q) {
                lhs += bx[(i * n + m) * n2 + (k * n + q)] * y(m, j) * y(q, l);
                lhs += x(i, m) * x(k, q) * by[(m * n + j) * n2 + (q * n + l)];
            }
        if (!(lhs == substitute(brackets[p], to_z)))
            failures[p] = "{" + entry_name("z", i, j) + ", " + entry_name("z", k, l) + "}";
    });
    for (const auto& f : failures)
        if (!f.empty()) return {false, f};
    return {};
}

TorusAction torus_from_basis(const std::vector<QVector>& basis, const std::vector<std::string>& params) {
    if (basis.size() != params.size()) throw InvalidInput("one parameter per basis element is required");
    const ContextPtr ctx = make_context(params);
    const std::size_t n = basis.empty() ? 0 : basis.front().size();
    TorusAction t{params, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(params.size(), 0);
        for (std::size_t m = 0; m < basis.size(); ++m) {
            if (basis[m][i].get_den() != 1 || !basis[m][i].get_num().fits_sint_p())
                throw InvalidInput("torus basis must be integral");
            e[m] = static_cast<std::int32_t>(basis[m][i].get_num().get_si());
        }
        t.diagonal.push_back(LaurentPoly::monomial(ctx, e));
    }
    return t;
}

std::optional<Weights> check_equivariance(const LaurentPoly& p, const TorusAction& left, const TorusAction& right) {
    std::vector<std::string> names = p.context()->names();
    for (const auto* side : {&left, &right})
        for (const auto& s : side->params) {
            if (std::find(names.begin(), names.end(), s) != names.end())
                throw InvalidInput("torus parameter name clashes with a variable: " + s);
            names.push_back(s);
        }
    const ContextPtr ctx = make_context(names);
    const std::size_t n = left.diagonal.size();
    if (right.diagonal.size() != n) throw InvalidInput("left and right tori must have the same size");
    std::map<std::string, LaurentPoly> scaled;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::string name = entry_name("x", static_cast<int>(i), static_cast<int>(j));
            if (!p.context()->find(name)) continue;
            scaled.emplace(name, left.diagonal[i].embed(ctx) * LaurentPoly::variable(ctx, name) * right.diagonal[j].embed(ctx));
        }
    const LaurentPoly base = p.embed(ctx);
    const auto q = exact_divide(substitute(base, scaled), base);
    if (!q || !q->is_monomial() || q->leading_term().coeff != 1) return std::nullopt;
    const Exponents& e = q->leading_term().exps;
    for (std::size_t v = 0; v < p.context()->size(); ++v)
        if (e[v] != 0) return std::nullopt;
    Weights w;
    std::size_t pos = p.context()->size();
    for (std::size_t m = 0; m < left.params.size(); ++m) w.eta.push_back(e[pos++]);
    for (std::size_t m = 0; m < right.params.size(); ++m) w.zeta.push_back(e[pos++]);
    return w;
}

LaurentPoly jacobi_spot_check(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h) {
    const BracketEngine e(spec, f.context());
    return e.bracket(f, e.bracket(g, h)) + e.bracket(g, e.bracket(h, f)) + e.bracket(h, e.bracket(f, g));
}

std::size_t jacobian_independence(const std::vector<LaurentPoly>& basis, const QMatrix& point) {
    if (basis.empty()) return 0;
    const int n = static_cast<int>(point.rows());
    if (point.cols() != point.rows()) throw InvalidInput("point must be a square matrix");
    const ContextPtr& ctx = basis.front().context();
    std::map<std::string, Rational> at;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at[entry_name("x", i, j)] = point(i, j);
    QMatrix jac(basis.size(), static_cast<std::size_t>(n) * n);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (!(*basis[r].context() == *ctx)) throw ContextMismatch();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                jac(r, static_cast<std::size_t>(i) * n + j) = evaluate(partial_derivative(basis[r], entry_name("x", i, j)), at);
    }
    return rank(jac);
}

}  // namespace clusterbd
