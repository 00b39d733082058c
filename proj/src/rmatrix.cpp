#include "clusterbd/rmatrix.hpp"

#include <sstream>
#include <stdexcept>

#include "clusterbd/errors.hpp"
#include "clusterbd/parallel.hpp"

namespace clusterbd {

RTensor RTensor::unit(int n, int a, int b, int c, int d, const Rational& coeff) {
    RTensor r(n);
    r.add({a, b, c, d}, coeff);
    return r;
}

RTensor RTensor::wedge(int n, int a, int b, int c, int d, const Rational& coeff) {
    RTensor r(n);
    r.add({a, b, c, d}, coeff);
    r.add({c, d, a, b}, -coeff);
    return r;
}

Rational RTensor::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RTensor::add(const Key& k, const Rational& v) {
    for (int x : k)
        if (x < 0 || x >= n_) throw IndexOutOfRange("tensor index out of range");
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

RTensor RTensor::operator+(const RTensor& o) const {
    if (o.n_ != n_) throw ContextMismatch();
    RTensor out = *this;
    for (const auto& [k, v] : o.terms_) out.add(k, v);
    return out;
}

RTensor RTensor::operator-(const RTensor& o) const { return *this + o.scaled(-1); }

RTensor RTensor::scaled(const Rational& s) const {
    RTensor out(n_);
    if (s == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * s);
    return out;
}

RTensor RTensor::swapped() const {
    RTensor out(n_);
    for (const auto& [k, v] : terms_) out.terms_.emplace(Key{k[2], k[3], k[0], k[1]}, v);
    return out;
}

std::string RTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        const Rational mag = abs(v);
        if (mag != 1) os << clusterbd::to_string(mag) << "*";
        os << "e" << k[0] + 1 << k[1] + 1 << "(x)e" << k[2] + 1 << k[3] + 1;
    }
    return os.str();
}

void RTensor3::add(const Key& k, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

RTensor3& RTensor3::operator+=(const RTensor3& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
}

Casimir casimir(int n) {
    if (n < 2) throw InvalidInput("casimir needs n >= 2");
    Casimir c{RTensor(n), RTensor(n)};
    const Rational inv = make_rational(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.t0.add({i, i, j, j}, (i == j ? Rational(1) : Rational(0)) - inv);
    c.t = c.t0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) c.t.add({i, j, j, i}, 1);
    return c;
}

namespace {

// Linear system in the unknowns c_ij (index i*n+j) of r0 = sum c_ij e_ii (x) e_jj.
// Rows: symmetric part equals t0, both legs traceless, and the root equations.
std::pair<QMatrix, QVector> r0_system(const BDTriple& t) {
    const int n = t.n;
    const std::size_t unknowns = static_cast<std::size_t>(n) * n;
    std::vector<QVector> rows;
    QVector rhs;
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    const Rational inv = make_rational(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            QVector row(unknowns);
            row[idx(i, j)] += 1;
            row[idx(j, i)] += 1;
            rows.push_back(row);
            rhs.push_back((i == j ? Rational(1) : Rational(0)) - inv);
        }
    for (int i = 0; i < n; ++i) {
        QVector by_row(unknowns), by_col(unknowns);
        for (int j = 0; j < n; ++j) {
            by_row[idx(i, j)] = 1;
            by_col[idx(j, i)] = 1;
        }
        rows.push_back(by_row);
        rhs.push_back(0);
        rows.push_back(by_col);
        rhs.push_back(0);
    }
    for (const auto& [a, b] : t.gamma) {
        const Root alpha = simple_root(a), galpha = simple_root(b);
        auto value = [](const Root& r, int i) { return (i == r.i ? 1 : 0) - (i == r.j ? 1 : 0); };
        for (int k = 0; k < n; ++k) {
            QVector row(unknowns);
            for (int i = 0; i < n; ++i) row[idx(i, k)] += value(galpha, i);
            for (int j = 0; j < n; ++j) row[idx(k, j)] += value(alpha, j);
            rows.push_back(row);
            rhs.push_back(0);
        }
    }
    QMatrix a(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
    return {a, rhs};
}

RTensor diagonal_tensor(int n, const QVector& c) {
    RTensor r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.add({i, i, j, j}, c[static_cast<std::size_t>(i) * n + j]);
    return r;
}

}  // namespace

std::string r0_violation(const BDTriple& t, const RTensor& r0) {
    if (r0.n() != t.n) return "r0 has the wrong size";
    const int n = t.n;
    QVector c(static_cast<std::size_t>(n) * n);
    for (const auto& [k, v] : r0.terms()) {
        if (k[0] != k[1] || k[2] != k[3]) return "r0 has a non-diagonal term";
        c[static_cast<std::size_t>(k[0]) * n + k[2]] = v;
    }
    const auto [a, rhs] = r0_system(t);
    const QVector lhs = a * c;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return "r0 equation " + std::to_string(i + 1) + " fails";
    return {};
}

R0Solution solve_r0(const BDTriple& t) {
    if (auto check = validate_bd_triple(t); !check) throw InvalidInput("invalid triple: " + check.reason);
    const auto [a, rhs] = r0_system(t);
    const auto sol = solve_affine(a, rhs);
    if (!sol) throw std::logic_error("r0 equations are inconsistent for a valid triple");
    R0Solution out{diagonal_tensor(t.n, sol->particular), {}};
    for (const auto& k : sol->kernel) out.freedom.push_back(diagonal_tensor(t.n, k));
    const RTensor half = casimir(t.n).t0.scaled(make_rational(1, 2));
    if (r0_violation(t, half).empty()) out.particular = half;
    const std::size_t kt = k_T(t);
    if (out.freedom.size() != (kt == 0 ? 0 : kt * (kt - 1) / 2))
        throw std::logic_error("r0 solution space has unexpected dimension");
    return out;
}

RTensor assemble_r(const BDTriple& t, const RTensor& r0) {
    if (auto why = r0_violation(t, r0); !why.empty()) throw InvalidInput("invalid r0: " + why);
    RTensor r = r0;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j) r.add({j, i, i, j}, 1);
    for (const auto& [alpha, beta] : bd_partial_order(t)) r = r + RTensor::wedge(t.n, alpha.j, alpha.i, beta.i, beta.j);
    return r;
}

RTensor3 cybe_tensor(const RTensor& r) {
    const int n = r.n();
    const std::vector<std::pair<RTensor::Key, Rational>> terms(r.terms().begin(), r.terms().end());
    std::vector<RTensor3> partial(terms.size(), RTensor3(n));
    // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb
    parallel_for(terms.size(), [&](std::size_t p) {
        const auto& [x, u] = terms[p];
        RTensor3& out = partial[p];
        for (const auto& [y, v] : terms) {
            const Rational uv = u * v;
            // [r12, r13]: [X, X'] (x) Y (x) Y'
            if (x[1] == y[0]) out.add({x[0], y[1], x[2], x[3], y[2], y[3]}, uv);
            if (y[1] == x[0]) out.add({y[0], x[1], x[2], x[3], y[2], y[3]}, -uv);
            // [r12, r23]: X (x) [Y, X'] (x) Y'
            if (x[3] == y[0]) out.add({x[0], x[1], x[2], y[1], y[2], y[3]}, uv);
            if (y[1] == x[2]) out.add({x[0], x[1], y[0], x[3], y[2], y[3]}, -uv);
            // [r13, r23]: X (x) X' (x) [Y, Y']
            if (x[3] == y[2]) out.add({x[0], x[1], y[0], y[1], x[2], y[3]}, uv);
            if (y[3] == x[2]) out.add({x[0], x[1], y[0], y[1], y[2], x[3]}, -uv);
        }
    });
    RTensor3 total(n);
    for (const auto& p : partial) total += p;
    return total;
}

CybeReport check_cybe_unitarity(const RTensor& r) {
    CybeReport rep;
    const RTensor3 c = cybe_tensor(r);
    rep.cybe_terms = c.terms().size();
    rep.cybe = c.is_zero();
    rep.unitarity = r.n() >= 2 && r + r.swapped() == casimir(r.n()).t;
    return rep;
}

AdReport check_ad_invariance(const RTensor& r, const CartanSubspace& h) {
    AdReport rep;
    for (const auto& [k, v] : r.terms()) {
        for (const auto& d : h.basis) {
            if (d.at(k[0]) - d.at(k[1]) + d.at(k[2]) - d.at(k[3]) != 0) {
                rep.violations.push_back(k);
                break;
            }
        }
    }
    return rep;
}

nlohmann::json to_json(const RTensor& r) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, v] : r.terms())
        terms.push_back({{"a", k[0] + 1}, {"b", k[1] + 1}, {"c", k[2] + 1}, {"d", k[3] + 1}, {"coeff", to_string(v)}});
    return {{"n", r.n()}, {"terms", terms}};
}

RTensor rtensor_from_json(const nlohmann::json& j) {
    try {
        RTensor r(j.at("n").get<int>());
        for (const auto& item : j.at("terms")) {
            const auto& c = item.at("coeff");
            const Rational v = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
            r.add({item.at("a").get<int>() - 1, item.at("b").get<int>() - 1, item.at("c").get<int>() - 1,
                   item.at("d").get<int>() - 1},
                  v);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("tensor JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("tensor JSON: ") + e.what());
    }
}

}  // namespace clusterbd
