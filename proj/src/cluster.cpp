#include "clusterbd/cluster.hpp"

#include <algorithm>
#include <cstdlib>

namespace clusterbd {

ExtExchangeMatrix::ExtExchangeMatrix(std::vector<std::vector<long>> rows, std::size_t stable_count)
    : rows_(std::move(rows)), m_(stable_count) {
    const std::size_t n = rows_.size();
    for (const auto& r : rows_)
        if (r.size() != n + m_) throw InvalidInput("extended exchange matrix: every row needs n+m entries");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (rows_[i][j] != -rows_[j][i])
                throw InvalidInput("extended exchange matrix: principal part is not skew-symmetric at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

ExtExchangeMatrix ExtExchangeMatrix::from_rows(std::vector<std::vector<long>> rows) {
    const std::size_t n = rows.size();
    const std::size_t cols = n ? rows.front().size() : 0;
    if (cols < n) throw InvalidInput("extended exchange matrix has fewer columns than rows");
    return ExtExchangeMatrix(std::move(rows), cols - n);
}

QMatrix ExtExchangeMatrix::to_qmatrix() const {
    QMatrix q(n(), cols());
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) q(i, j) = rows_[i][j];
    return q;
}

ExtExchangeMatrix ExtExchangeMatrix::without_last_column() const {
    if (m_ == 0) throw InvalidInput("no stable column to delete");
    auto rows = rows_;
    for (auto& r : rows) r.pop_back();
    return ExtExchangeMatrix(std::move(rows), m_ - 1);
}

void validate_seed(const Seed& seed) {
    const std::size_t cols = seed.matrix.cols();
    if (seed.variables.size() != cols || seed.names.size() != cols)
        throw InvalidInput("seed: need one named variable per column of the exchange matrix");
    for (const auto& v : seed.variables)
        if (!v.context() || !(*v.context() == *seed.variables.front().context()))
            throw InvalidInput("seed: variables must share one context");
}

ExtExchangeMatrix mutate_matrix(const ExtExchangeMatrix& b, std::size_t k) {
    if (k >= b.n()) throw IndexOutOfRange("mutation direction must be a mutable index");
    auto rows = b.rows();
    for (std::size_t i = 0; i < b.n(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                rows[i][j] = -b(i, j);
            } else {
                const long bik = b(i, k), bkj = b(k, j);
                rows[i][j] = b(i, j) + (std::labs(bik) * bkj + bik * std::labs(bkj)) / 2;
            }
        }
    }
    return ExtExchangeMatrix(std::move(rows), b.m());
}

ExchangeResult exchange_variable(const Seed& seed, std::size_t k) {
    validate_seed(seed);
    if (k >= seed.matrix.n()) throw IndexOutOfRange("exchange direction must be a mutable index");
    const LaurentPoly& xk = seed.variables[k];
    if (xk.is_zero()) throw DivisionByZero();
    const ContextPtr& ctx = xk.context();
    LaurentPoly plus = LaurentPoly::constant(ctx, 1);
    LaurentPoly minus = LaurentPoly::constant(ctx, 1);
    for (std::size_t i = 0; i < seed.matrix.cols(); ++i) {
        const long e = seed.matrix(k, i);
        if (e > 0) plus *= seed.variables[i].pow(static_cast<int>(e));
        else if (e < 0) minus *= seed.variables[i].pow(static_cast<int>(-e));
    }
    ExchangeResult r{plus + minus, xk, std::nullopt};
    r.quotient = exact_divide(r.numerator, xk);
    return r;
}

bool ExchangeResult::polynomial() const {
    if (!quotient) return false;
    for (const auto& t : quotient->terms())
        for (auto e : t.exps)
            if (e < 0) return false;
    return true;
}

Seed mutate_seed(const Seed& seed, std::size_t k) {
    ExchangeResult ex = exchange_variable(seed, k);
    if (!ex.regular()) throw InvalidInput("exchanged variable is not a Laurent polynomial in the seed's variables");
    Seed out = seed;
    out.matrix = mutate_matrix(seed.matrix, k);
    out.variables[k] = *ex.quotient;
    return out;
}

CompatibilityResult check_compatibility(const ExtExchangeMatrix& b, const QMatrix& omega) {
    CompatibilityResult res;
    const std::size_t n = b.n(), cols = b.cols();
    if (omega.rows() != cols || omega.cols() != cols) {
        res.reason = "coefficient matrix must be (n+m)x(n+m)";
        return res;
    }
    if (!omega.is_skew_symmetric()) {
        res.reason = "coefficient matrix is not skew-symmetric";
        return res;
    }
    res.product = b.to_qmatrix() * omega;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& v = res.product(i, j);
            const bool must_vanish = (j != i);
            if ((must_vanish && v != 0) || (!must_vanish && v == 0)) {
                res.bad_row = i;
                res.bad_col = j;
                res.reason = must_vanish ? "off-diagonal entry of B*Omega is nonzero" : "diagonal entry of D is zero";
                return res;
            }
        }
    }
    res.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) res.diagonal.push_back(res.product(i, i));
    res.compatible = true;
    return res;
}

ToricReport check_toric_weights(const ExtExchangeMatrix& b, const WeightAssignment& w, std::size_t k_t) {
    const std::size_t cols = b.cols();
    if (w.eta.size() != cols || w.zeta.size() != cols)
        throw InvalidInput("weight lists must have one entry per extended-cluster variable");
    ToricReport rep;
    rep.expected_span = k_t;
    auto span_of = [&](const std::vector<QVector>& ws) {
        QMatrix m(cols, k_t);
        for (std::size_t i = 0; i < cols; ++i) {
            if (ws[i].size() != k_t) throw InvalidInput("weight vector has wrong dimension");
            for (std::size_t a = 0; a < k_t; ++a) m(i, a) = ws[i][a];
        }
        return m;
    };
    const QMatrix eta = span_of(w.eta), zeta = span_of(w.zeta);
    rep.eta_span = rank(eta);
    rep.zeta_span = rank(zeta);
    const QMatrix bq = b.to_qmatrix();
    const QMatrix be = bq * eta, bz = bq * zeta;
    for (std::size_t i = 0; i < b.n(); ++i) {
        bool eta_zero = true, zeta_zero = true;
        for (std::size_t a = 0; a < k_t; ++a) {
            eta_zero = eta_zero && be(i, a) == 0;
            zeta_zero = zeta_zero && bz(i, a) == 0;
        }
        if (!eta_zero) rep.eta_failures.push_back(i);
        if (!zeta_zero) rep.zeta_failures.push_back(i);
    }
    return rep;
}

RankReport check_full_rank_and_count(const ExtExchangeMatrix& b, std::size_t expected_stable) {
    return RankReport{rank(b.to_qmatrix()), b.n(), b.m(), expected_stable};
}

nlohmann::json to_json(const Seed& seed) {
    validate_seed(seed);
    nlohmann::json vars = nlohmann::json::array();
    for (std::size_t i = 0; i < seed.variables.size(); ++i)
        vars.push_back({{"name", seed.names[i]}, {"poly", to_json(seed.variables[i])}});
    return {{"n", seed.matrix.n()},
            {"m", seed.matrix.m()},
            {"Btilde", seed.matrix.rows()},
            {"context", seed.variables.front().context()->names()},
            {"variables", std::move(vars)}};
}

Seed seed_from_json(const nlohmann::json& j) {
    try {
        const std::size_t n = j.at("n").get<std::size_t>();
        const std::size_t m = j.at("m").get<std::size_t>();
        auto rows = j.at("Btilde").get<std::vector<std::vector<long>>>();
        if (rows.size() != n) throw InvalidInput("seed JSON: Btilde must have n rows");
        std::vector<std::string> names;
        if (j.contains("context")) {
            names = j.at("context").get<std::vector<std::string>>();
        } else {
            for (const auto& v : j.at("variables"))
                for (const auto& term : v.at("poly"))
                    if (term.contains("exps"))
                        for (const auto& [name, e] : term.at("exps").items())
                            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
        }
        const ContextPtr ctx = make_context(std::move(names));
        Seed seed{ExtExchangeMatrix(std::move(rows), m), {}, {}};
        for (const auto& v : j.at("variables")) {
            seed.names.push_back(v.at("name").get<std::string>());
            seed.variables.push_back(laurent_from_json(ctx, v.at("poly")));
        }
        validate_seed(seed);
        return seed;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("seed JSON: ") + e.what());
    }
}

}  // namespace clusterbd
