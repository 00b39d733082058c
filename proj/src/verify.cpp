#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "clusterbd/cases.hpp"
#include "clusterbd/parallel.hpp"

namespace clusterbd {

namespace {

using Outcome = std::pair<CheckStatus, std::string>;

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string vec_string(const QVector& v) {
    std::vector<std::string> parts;
    for (const auto& q : v) parts.push_back(to_string(q));
    return "(" + join(parts, ",") + ")";
}

std::string identity_string(int sign, std::size_t size) {
    return std::string(sign < 0 ? "-I" : "I") + std::to_string(size);
}

// Random matrix of determinant one: unit lower times unit upper triangular.
QMatrix random_sl_point(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-4, 4);
    QMatrix lower = QMatrix::identity(n), upper = QMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower(i, j) = dist(rng);
            upper(j, i) = dist(rng);
        }
    return lower * upper;
}

// Zero of p in the ambient affine space, found by solving for a variable p is linear in.
std::optional<QVector> vanishing_point(const LaurentPoly& p, std::mt19937_64& rng) {
    const std::size_t nv = p.context()->size();
    std::uniform_int_distribution<int> dist(-3, 3);
    for (std::size_t v = 0; v < nv; ++v) {
        bool linear = true, occurs = false;
        for (const auto& t : p.terms()) {
            if (t.exps[v] < 0 || t.exps[v] > 1) linear = false;
            if (t.exps[v] == 1) occurs = true;
        }
        if (!linear || !occurs) continue;
        const LaurentPoly slope = partial_derivative(p, v);
        for (int attempt = 0; attempt < 32; ++attempt) {
            QVector point(nv);
            for (auto& q : point) q = dist(rng);
            point[v] = 0;
            try {
                const Rational a = evaluate(slope, point);
                if (a == 0) continue;
                point[v] = -evaluate(p, point) / a;
                return point;
            } catch (const ZeroAtNegativePower&) {
            }
        }
    }
    return std::nullopt;
}

bool invertible_at(const QVector& point, int n) { return rank(QMatrix(n, n, point)) == static_cast<std::size_t>(n); }

bool is_scalar_identity(const QVector& diagonal, int sign) {
    return std::all_of(diagonal.begin(), diagonal.end(), [&](const Rational& d) { return d == sign; });
}

std::string first_mismatch(const QMatrix& a, const QMatrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + to_string(a(i, j)) + " vs " +
                       to_string(b(i, j));
    return "";
}

class Pipeline {
public:
    Pipeline(const CaseSpec& spec, const VerifyOptions& options) : c_(spec), opt_(options), rng_(options.seed) {
        report_.case_name = c_.name;
    }

    VerificationReport run() {
        stage("triple", [&] { return triple(); });
        stage("cartan", [&] { return cartan(); });
        stage("r0", [&] { return r0(); });
        stage("cybe", [&] { return cybe(); });
        stage("ad-invariance", [&] { return ad_invariance(); });
        stage("coefficient-matrix", [&] { return coefficient_matrix(); });
        stage("compatibility", [&] { return compatibility(); });
        stage("rank", [&] { return rank_counts(); });
        stage("regularity", [&] { return regularity(); });
        stage("stable-nonconstant", [&] { return stable_nonconstant(); });
        stage("jacobian", [&] { return jacobian(); });
        stage("equivariance", [&] { return equivariance(); });
        stage("bracket-values", [&] { return bracket_values(); });
        return report_;
    }

private:
    bool bd() const { return c_.kind != CaseKind::Triangular; }
    bool slow_skipped() const { return opt_.skip_slow && c_.n >= 4; }

    void stage(const std::string& name, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r{name, CheckStatus::Fail, "", 0};
        try {
            std::tie(r.status, r.witness) = body();
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.witness = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(r));
    }

    static Outcome pass(std::string w) { return {CheckStatus::Pass, std::move(w)}; }
    static Outcome fail(std::string w) { return {CheckStatus::Fail, std::move(w)}; }
    static Outcome skip(std::string w) { return {CheckStatus::Skip, std::move(w)}; }
    static Outcome verdict(bool ok, std::string w) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(w)}; }

    Outcome triple() {
        if (!bd()) return skip("r-matrix given directly, no triple");
        const auto check = validate_bd_triple(c_.triple);
        return verdict(bool(check), check ? "valid, |Gamma1| = " + std::to_string(c_.triple.gamma.size()) : check.reason);
    }

    Outcome cartan() {
        if (!bd()) return skip("no triple");
        const CartanSubspace h = h_T(c_.triple);
        const std::size_t k = k_T(c_.triple);
        QMatrix both(h.dim() + c_.torus_basis.size(), c_.n), torus(c_.torus_basis.size(), c_.n);
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (int a = 0; a < c_.n; ++a) both(i, a) = h.basis[i][a];
        for (std::size_t i = 0; i < c_.torus_basis.size(); ++i)
            for (int a = 0; a < c_.n; ++a) both(h.dim() + i, a) = torus(i, a) = c_.torus_basis[i][a];
        const bool ok = h.dim() == k && rank(torus) == k && rank(both) == k;
        std::vector<std::string> basis;
        for (const auto& v : c_.torus_basis) basis.push_back("diag" + vec_string(v));
        return verdict(ok, "k_T = " + std::to_string(k) + ", dim h_T = " + std::to_string(h.dim()) +
                               ", torus basis " + join(basis, ", ") + (ok ? " spans h_T" : " does not span h_T"));
    }

    Outcome r0() {
        if (!bd()) return skip("no triple");
        const R0Solution sol = solve_r0(c_.triple);
        const std::size_t k = k_T(c_.triple);
        const std::size_t expected_dim = k * (k - 1) / 2;
        const std::string violation = r0_violation(c_.triple, c_.r0);
        if (!violation.empty()) return fail("printed r0 violates the equations: " + violation);
        // printed r0 - particular must lie in the span of the free directions
        const RTensor diff = c_.r0 - sol.particular;
        std::vector<RTensor::Key> keys;
        for (const auto& [key, v] : diff.terms()) keys.push_back(key);
        for (const auto& f : sol.freedom)
            for (const auto& [key, v] : f.terms()) keys.push_back(key);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        QMatrix a(keys.size(), sol.freedom.size());
        QVector rhs(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            rhs[i] = diff.coeff(keys[i]);
            for (std::size_t j = 0; j < sol.freedom.size(); ++j) a(i, j) = sol.freedom[j].coeff(keys[i]);
        }
        const bool in_span = solve_affine(a, rhs).has_value();
        const bool ok = sol.freedom.size() == expected_dim && in_span;
        return verdict(ok, "solution space dimension " + std::to_string(sol.freedom.size()) + " (expected " +
                               std::to_string(expected_dim) + "); closed form " +
                               (in_span ? "lies in it" : "is not in the solution space"));
    }

    Outcome cybe() {
        if (!bd()) {
            const bool cy = cybe_tensor(c_.r).is_zero();
            const bool skew = (c_.r + c_.r.swapped()).is_zero();
            return verdict(cy && skew, std::string("CYBE ") + (cy ? "holds" : "fails") + ", r + r21 " +
                                           (skew ? "= 0" : "!= 0"));
        }
        const CybeReport rep = check_cybe_unitarity(c_.r);
        return verdict(rep.ok(), std::string("CYBE ") + (rep.cybe ? "holds" : "fails (" + std::to_string(rep.cybe_terms) +
                                                                                   " terms)") +
                                     ", r + r21 " + (rep.unitarity ? "= t" : "!= t"));
    }

    Outcome ad_invariance() {
        if (!bd()) return skip("no triple");
        const AdReport rep = check_ad_invariance(c_.r, h_T(c_.triple));
        std::string w = std::to_string(c_.r.terms().size()) + " terms of r checked";
        if (!rep.ok()) {
            const auto& k = rep.violations.front();
            w += ", " + std::to_string(rep.violations.size()) + " violate, first e" + std::to_string(k[0] + 1) +
                 std::to_string(k[1] + 1) + " (x) e" + std::to_string(k[2] + 1) + std::to_string(k[3] + 1);
        }
        return verdict(rep.ok(), w);
    }

    Outcome coefficient_matrix() {
        if (bd() && slow_skipped()) return skip("skipped (--skip-slow)");
        const Extraction ex = extract_coefficient_matrix(c_.bracket_spec(), c_.basis);
        if (!bd()) {
            if (ex) return fail("bracket unexpectedly log-canonical");
            return {CheckStatus::ExpectedFailure,
                    "not log-canonical as expected: {" + c_.names[ex.bad_i] + "," + c_.names[ex.bad_j] +
                        "} = " + ex.bracket.to_string() +
                        (ex.residue ? ", quotient " + ex.residue->to_string() : ", not divisible")};
        }
        if (!ex) return fail("not log-canonical at (" + c_.names[ex.bad_i] + "," + c_.names[ex.bad_j] + "): " + ex.bracket.to_string());
        omega_ = *ex.omega;
        const auto expected = c_.omega_expected();
        if (!expected) return pass("log-canonical on " + std::to_string(c_.basis.size()) + " functions");
        if (!(*omega_ == *expected)) return fail("differs from printed matrix at " + first_mismatch(*omega_, *expected));
        std::string w = "equals printed " + std::to_string(c_.omega_scalar) + "*Omega / " + std::to_string(c_.omega_scalar);
        if (!c_.omega_errata.empty()) {
            std::vector<std::string> fixes;
            for (const auto& e : c_.omega_errata)
                fixes.push_back("(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ") " +
                                std::to_string(e.printed) + " -> " + std::to_string(e.corrected));
            w += " after corrections " + join(fixes, ", ");
        }
        for (const auto& note : c_.notes) w += "; " + note;
        return pass(w);
    }

    Outcome compatibility() {
        if (!c_.btilde) return skip("no exchange matrix supplied");
        std::string source = "extracted";
        QMatrix omega;
        if (omega_) {
            omega = *omega_;
        } else if (auto e = c_.omega_expected(); e && slow_skipped()) {
            omega = *e;
            source = "printed (corrected)";
        } else {
            return fail("no coefficient matrix available");
        }
        std::vector<std::string> parts;
        bool ok = true;
        const auto sl = check_compatibility(*c_.btilde, omega);
        ok = ok && sl && is_scalar_identity(sl.diagonal, c_.d_sign);
        parts.push_back(sl ? "B~ Omega = (D 0) with D = " + vec_string(sl.diagonal)
                           : "SL: " + sl.reason + " at (" + std::to_string(sl.bad_row + 1) + "," +
                                 std::to_string(sl.bad_col + 1) + ")");
        if (c_.btilde_gl) {
            const auto gl = check_compatibility(*c_.btilde_gl, omega.padded(1, 1));
            ok = ok && gl && is_scalar_identity(gl.diagonal, c_.d_sign);
            parts.push_back(gl ? "GL extension agrees" : "GL: " + gl.reason);
        }
        if (ok) parts.front() = "D = " + identity_string(c_.d_sign, c_.mutable_count());
        if (c_.stated_d_sign != c_.d_sign)
            parts.push_back("text states D = " + identity_string(c_.stated_d_sign, c_.mutable_count()) +
                            ", the printed matrices give " + identity_string(c_.d_sign, c_.mutable_count()));
        if (c_.omega_printed && !c_.omega_errata.empty()) {
            const auto verbatim = check_compatibility(
                *c_.btilde, QMatrix::from_ints(*c_.omega_printed).scaled(make_rational(1, c_.omega_scalar)));
            if (!verbatim)
                parts.push_back("uncorrected printed matrix fails: " + verbatim.reason);
        }
        parts.push_back("Omega " + source);
        return verdict(ok, join(parts));
    }

    Outcome rank_counts() {
        if (!c_.btilde) return skip("no exchange matrix supplied");
        const std::size_t k = c_.k_t();
        const auto sl = check_full_rank_and_count(*c_.btilde, 2 * k);
        bool ok = sl.ok();
        std::string w = "rank " + std::to_string(sl.rank) + " of " + std::to_string(sl.n) + ", " + std::to_string(sl.m) +
                        " stable (2k_T = " + std::to_string(2 * k) + ")";
        if (c_.btilde_gl) {
            const auto gl = check_full_rank_and_count(*c_.btilde_gl, 2 * k + 1);
            const bool deletes = c_.btilde_gl->without_last_column() == *c_.btilde;
            ok = ok && gl.ok() && deletes;
            w += "; GL: rank " + std::to_string(gl.rank) + ", " + std::to_string(gl.m) + " stable" +
                 (deletes ? ", last-column deletion gives B~" : ", last-column deletion does not give B~");
        }
        return verdict(ok, w);
    }

    Outcome regularity() {
        if (!c_.btilde_gl) return skip("no exchange matrix supplied");
        if (slow_skipped()) return skip("skipped (--skip-slow)");
        const Seed seed = c_.gl_seed();
        const std::size_t count = c_.mutable_count();
        std::vector<int> state(count);  // 0 not regular, 1 Laurent, 2 polynomial
        parallel_for(count, [&](std::size_t k) {
            const ExchangeResult ex = exchange_variable(seed, k);
            state[k] = ex.polynomial() ? 2 : ex.regular() ? 1 : 0;
        });
        std::vector<std::string> bad;
        for (std::size_t k = 0; k < count; ++k)
            if (state[k] != 2)
                bad.push_back(c_.names[k] + (state[k] == 1 ? " (Laurent only)" : " (not divisible)"));
        if (!bad.empty()) return fail("not polynomial in directions " + join(bad, ", "));
        std::string w = "all " + std::to_string(count) + " adjacent variables are polynomials on GL_" + std::to_string(c_.n);
        if (!c_.sign_flips.empty()) {
            std::vector<std::string> flipped;
            for (std::size_t i : c_.sign_flips) flipped.push_back(c_.names[i]);
            w += " (seed uses -" + join(flipped, ", -") + ")";
        }
        return pass(w);
    }

    Outcome stable_nonconstant() {
        if (c_.stable.empty()) return skip("no stable variables");
        std::vector<std::pair<std::string, LaurentPoly>> items;
        for (std::size_t i : c_.stable) items.emplace_back(c_.names[i], c_.basis[i]);
        if (c_.btilde_gl) items.emplace_back("det", c_.det());
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& [name, p] : items) {
            if (p.is_constant()) {
                ok = false;
                parts.push_back(name + " is constant");
                continue;
            }
            const auto zero = vanishing_point(p, rng_);
            if (!zero) {
                parts.push_back(name + ": nonconstant, no zero found");
            } else if (name == "det") {
                parts.push_back("det: zeros exist only off GL_" + std::to_string(c_.n) + " (never vanishes on the group)");
            } else {
                const bool invertible = invertible_at(*zero, c_.n);
                parts.push_back(name + ": zero found" + (invertible ? " at an invertible matrix" : " at a singular matrix"));
            }
        }
        return verdict(ok, join(parts));
    }

    Outcome jacobian() {
        // generic rank: the maximum over a few random points
        std::size_t r = 0;
        for (int attempt = 0; attempt < 4 && r < c_.basis.size(); ++attempt)
            r = std::max(r, jacobian_independence(c_.basis, random_sl_point(c_.n, rng_)));
        return verdict(r == c_.basis.size(), "rank " + std::to_string(r) + " of " + std::to_string(c_.basis.size()) +
                                                 " at random points of SL_" + std::to_string(c_.n));
    }

    Outcome equivariance() {
        if (!c_.weights) return skip("no weights");
        const TorusAction left = torus_from_basis(c_.torus_basis, c_.left_params);
        const TorusAction right = torus_from_basis(c_.torus_basis, c_.right_params);
        std::vector<std::string> bad;
        for (std::size_t i = 0; i < c_.basis.size(); ++i) {
            const auto w = check_equivariance(c_.basis[i], left, right);
            if (!w) {
                bad.push_back(c_.names[i] + " is not equivariant");
            } else if (w->eta != c_.weights->eta[i] || w->zeta != c_.weights->zeta[i]) {
                bad.push_back(c_.names[i] + " has weights " + vec_string(w->eta) + "/" + vec_string(w->zeta) +
                              ", listed " + vec_string(c_.weights->eta[i]) + "/" + vec_string(c_.weights->zeta[i]));
            }
        }
        if (!bad.empty()) return fail(join(bad));
        std::string w = "weights of all " + std::to_string(c_.basis.size()) + " functions match";
        if (!c_.btilde) return pass(w);
        const ToricReport t = check_toric_weights(*c_.btilde, *c_.weights, c_.k_t());
        w += "; spans " + std::to_string(t.eta_span) + "/" + std::to_string(t.zeta_span) + " (k_T = " +
             std::to_string(c_.k_t()) + ")";
        bool ok = t.ok();
        if (!t.balance_ok()) w += "; unbalanced rows";
        if (c_.btilde_gl) {
            WeightAssignment gl = *c_.weights;
            gl.eta.push_back(QVector(c_.k_t()));
            gl.zeta.push_back(QVector(c_.k_t()));
            const auto dw = check_equivariance(c_.det(), left, right);
            const bool det_ok = dw && dw->eta == gl.eta.back() && dw->zeta == gl.zeta.back();
            const ToricReport tg = check_toric_weights(*c_.btilde_gl, gl, c_.k_t());
            ok = ok && det_ok && tg.ok();
            w += tg.ok() && det_ok ? "; GL extension balanced" : "; GL extension fails";
        }
        return verdict(ok, w);
    }

    Outcome bracket_values() {
        if (c_.expected_brackets.empty()) return skip("no expected bracket values");
        const BracketSpec spec = c_.bracket_spec();
        std::vector<std::string> parts;
        bool ok = true;
        for (const auto& e : c_.expected_brackets) {
            const LaurentPoly got = sklyanin_bracket(spec, c_.lookup(e.f), c_.lookup(e.g));
            const bool match = got == e.value;
            ok = ok && match;
            parts.push_back("{" + e.f + "," + e.g + "} = " + got.to_string() + (match ? "" : " (expected " + e.value.to_string() + ")"));
        }
        return verdict(ok, join(parts));
    }

    const CaseSpec& c_;
    VerifyOptions opt_;
    std::mt19937_64 rng_;
    VerificationReport report_;
    std::optional<QMatrix> omega_;
};

QMatrix skew_from(std::size_t k, const std::function<Rational()>& draw) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            m(i, j) = draw();
            m(j, i) = -m(i, j);
        }
    return m;
}

std::string matrix_string(const QMatrix& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        QVector r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(vec_string(r));
    }
    return "[" + join(rows, ",") + "]";
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::ExpectedFailure: return "expected-failure";
    }
    return "?";
}

bool VerificationReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw InvalidInput("no check named '" + name + "'");
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "case " << case_name << "\n";
    for (const auto& c : checks) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", c.seconds);
        out << "  [" << to_string(c.status) << "] " << c.name << " (" << secs << "): " << c.witness << "\n";
    }
    out << (ok() ? "all expected outcomes met" : "VERIFICATION FAILED") << "\n";
    return out.str();
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
    return {{"case", r.case_name}, {"checks", std::move(checks)}};
}

VerificationReport verify_case(const CaseSpec& spec, const VerifyOptions& options) {
    return Pipeline(spec, options).run();
}

VerificationReport verify_case(const std::string& name, const VerifyOptions& options) {
    return verify_case(load_case(name), options);
}

std::vector<Twist> random_twists(const CaseSpec& spec, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(-3, 3), denom(1, 2);
    auto draw = [&]() -> Rational { return make_rational(numer(rng), denom(rng)); };
    const std::size_t k = spec.k_t();
    std::vector<Twist> out;
    for (std::size_t s = 0; s < count; ++s) {
        Twist t{spec.torus_basis, skew_from(k, draw), skew_from(k, draw), QMatrix(k, k)};
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) t.v12(i, j) = draw();
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::pair<std::string, Twist>> twist_grid(const CaseSpec& spec) {
    const std::size_t k = spec.k_t();
    Rational next = 1;
    const QMatrix a = skew_from(k, [&] { return next++; });
    QMatrix odd(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) odd(i, j) = static_cast<long>(i * k + j + 1);
    if (k == 1) odd(0, 0) = 2;
    const std::vector<std::pair<std::string, QMatrix>> v12s{
        {"V12=0", QMatrix(k, k)}, {"V12=I", QMatrix::identity(k)}, {"V12=N", odd}};
    const std::vector<std::tuple<std::string, QMatrix, QMatrix>> blocks{
        {"V2=-V1", a, a.scaled(-1)}, {"V2=V1", a, a}, {"V1=0,V2=A", QMatrix(k, k), a}};
    std::vector<std::pair<std::string, Twist>> out;
    for (const auto& [ln, v12] : v12s)
        for (const auto& [bn, v1, v2] : blocks) out.push_back({ln + "," + bn, Twist{spec.torus_basis, v1, v2, v12}});
    return out;
}

TwistSample evaluate_twist(const CaseSpec& spec, const Twist& twist, const std::string& label) {
    TwistSample s;
    s.label = label;
    s.twist = twist;
    BracketSpec b{spec.n, spec.r, twist};
    s.expected_poisson_lie = twist.v12.is_zero() && twist.v2 == twist.v1.scaled(-1);
    const Extraction ex = extract_coefficient_matrix(b, spec.basis);
    s.log_canonical = bool(ex);
    std::vector<std::string> parts{"V1=" + matrix_string(twist.v1), "V2=" + matrix_string(twist.v2),
                                   "V12=" + matrix_string(twist.v12)};
    if (ex && spec.btilde) {
        const auto compat = check_compatibility(*spec.btilde, *ex.omega);
        s.same_d = compat && is_scalar_identity(compat.diagonal, spec.d_sign);
        if (!s.same_d) parts.push_back("compatibility: " + (compat ? "D = " + vec_string(compat.diagonal) : compat.reason));
    } else {
        s.same_d = s.log_canonical;
    }
    if (!ex) parts.push_back("not log-canonical at (" + std::to_string(ex.bad_i + 1) + "," + std::to_string(ex.bad_j + 1) + ")");
    s.vanishes_at_identity = poisson_lie_at_identity(b);
    const auto mult = check_multiplicativity(b);
    s.multiplicative = mult.ok;
    if (!mult.ok) parts.push_back("not multiplicative: " + mult.witness);
    s.witness = join(parts);
    return s;
}

bool TwistFamilyReport::ok() const {
    return std::all_of(samples.begin(), samples.end(), [](const TwistSample& s) { return s.ok(); });
}

std::string TwistFamilyReport::to_text() const {
    std::ostringstream out;
    out << "twist family for " << case_name << "\n";
    for (const auto& s : samples) {
        out << "  [" << (s.ok() ? "pass" : "fail") << "] " << s.label << ": log-canonical=" << s.log_canonical
            << " same-D=" << s.same_d << " vanishes-at-identity=" << s.vanishes_at_identity
            << " multiplicative=" << s.multiplicative << " expected-poisson-lie=" << s.expected_poisson_lie << "\n";
    }
    out << (ok() ? "all samples behave as expected" : "TWIST FAMILY FAILED") << "\n";
    return out.str();
}

nlohmann::json to_json(const TwistFamilyReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"label", s.label},
                           {"log_canonical", s.log_canonical},
                           {"same_d", s.same_d},
                           {"vanishes_at_identity", s.vanishes_at_identity},
                           {"multiplicative", s.multiplicative},
                           {"expected_poisson_lie", s.expected_poisson_lie},
                           {"status", s.ok() ? "pass" : "fail"},
                           {"witness", s.witness}});
    return {{"case", r.case_name}, {"samples", std::move(samples)}};
}

TwistFamilyReport verify_twist_family(const std::string& name, std::size_t samples, std::uint64_t seed) {
    const CaseSpec spec = load_case(name);
    if (spec.kind == CaseKind::Triangular || spec.k_t() == 0) throw InvalidInput(name + ": twists need k_T >= 1");
    TwistFamilyReport rep{name, {}};
    const std::size_t k = spec.k_t();
    rep.samples.push_back(evaluate_twist(spec, Twist{spec.torus_basis, QMatrix(k, k), QMatrix(k, k), QMatrix(k, k)}, "zero"));
    const auto twists = random_twists(spec, samples, seed);
    for (std::size_t i = 0; i < twists.size(); ++i)
        rep.samples.push_back(evaluate_twist(spec, twists[i], "random-" + std::to_string(i + 1)));
    return rep;
}

}  // namespace clusterbd
