#include "clusterbd/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clusterbd {

namespace {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;

std::vector<Term> sorted_terms(TermMap&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back(Term{e, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
    return out;
}

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool contexts_match(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VarContext::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t VarContext::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw UnknownVariable(name);
    return *i;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

ContextPtr matrix_context(int n, const std::vector<std::string>& extra) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    names.insert(names.end(), extra.begin(), extra.end());
    return make_context(std::move(names));
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
    const long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

LaurentPoly LaurentPoly::constant(ContextPtr ctx, const Rational& c) {
    LaurentPoly p(ctx);
    if (c != 0) p.terms_.push_back(Term{Exponents(ctx->size(), 0), c});
    return p;
}

LaurentPoly LaurentPoly::variable(ContextPtr ctx, const std::string& name, std::int32_t power) {
    Exponents e(ctx->size(), 0);
    e[ctx->index(name)] = power;
    return monomial(std::move(ctx), std::move(e));
}

LaurentPoly LaurentPoly::monomial(ContextPtr ctx, Exponents exps, const Rational& coeff) {
    if (exps.size() != ctx->size()) throw InvalidInput("exponent vector length differs from context size");
    LaurentPoly p(std::move(ctx));
    if (coeff != 0) p.terms_.push_back(Term{std::move(exps), coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    TermMap acc;
    for (auto& t : terms) {
        if (t.exps.size() != ctx->size()) throw InvalidInput("exponent vector length differs from context size");
        acc[std::move(t.exps)] += t.coeff;
    }
    LaurentPoly p(std::move(ctx));
    p.terms_ = sorted_terms(std::move(acc));
    return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(ContextPtr ctx, std::vector<Term> terms) {
    LaurentPoly p(std::move(ctx));
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Exponents LaurentPoly::min_exponents() const {
    Exponents m(ctx_ ? ctx_->size() : 0, 0);
    if (terms_.empty()) return m;
    m = terms_[0].exps;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
    return m;
}

void LaurentPoly::require_same_context(const LaurentPoly& g) const {
    if (!contexts_match(ctx_, g.ctx_)) throw ContextMismatch();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
    require_same_context(g);
    LaurentPoly out(ctx_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin(), b = g.terms_.begin();
    while (a != terms_.end() && b != g.terms_.end()) {
        if (grlex_greater(a->exps, b->exps)) {
            out.terms_.push_back(*a++);
        } else if (grlex_greater(b->exps, a->exps)) {
            out.terms_.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back(Term{a->exps, std::move(c)});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, g.terms_.end());
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const { return *this + (-g); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
    require_same_context(g);
    if (terms_.empty() || g.terms_.empty()) return LaurentPoly(ctx_);
    if (g.terms_.size() == 1) return times_monomial(g.terms_[0].exps, g.terms_[0].coeff);
    if (terms_.size() == 1) return g.times_monomial(terms_[0].exps, terms_[0].coeff);
    TermMap acc;
    acc.reserve(terms_.size() * g.terms_.size());
    const std::size_t nv = ctx_->size();
    Exponents e(nv);
    Rational c;
    for (const auto& s : terms_) {
        for (const auto& t : g.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = s.exps[i] + t.exps[i];
            mpq_mul(c.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    LaurentPoly out(ctx_);
    out.terms_ = sorted_terms(std::move(acc));
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    if (s == 0) return LaurentPoly(ctx_);
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= s;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) { return *this = *this + g; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) { return *this = *this - g; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) { return *this = *this * g; }

LaurentPoly LaurentPoly::times_monomial(const Exponents& exps, const Rational& coeff) const {
    if (coeff == 0) return LaurentPoly(ctx_);
    LaurentPoly p = *this;
    // Multiplying by a monomial preserves the term order.
    for (auto& t : p.terms_) {
        for (std::size_t i = 0; i < exps.size(); ++i) t.exps[i] += exps[i];
        t.coeff *= coeff;
    }
    return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) {
        if (!is_monomial()) throw InvalidInput("negative power of a non-monomial");
        Exponents e = terms_[0].exps;
        for (auto& x : e) x = -x;
        Rational c = 1 / terms_[0].coeff;
        return monomial(ctx_, std::move(e), c).pow(-k);
    }
    LaurentPoly result = constant(ctx_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::embed(const ContextPtr& target) const {
    if (contexts_match(ctx_, target)) return *this;
    std::vector<std::optional<std::size_t>> map(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) map[i] = target->find(ctx_->name(i));
    LaurentPoly out(target);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(target->size(), 0);
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!map[i]) throw UnknownVariable(ctx_->name(i));
            e[*map[i]] = t.exps[i];
        }
        out.terms_.push_back(Term{std::move(e), t.coeff});
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& g) const {
    if (terms_.empty() && g.terms_.empty()) return true;
    return contexts_match(ctx_, g.ctx_) && terms_ == g.terms_;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        bool wrote = false;
        const bool unit_monomial = std::all_of(t.exps.begin(), t.exps.end(), [](auto x) { return x == 0; });
        if (c != 1 || unit_monomial) {
            os << clusterbd::to_string(c);
            wrote = true;
        }
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (wrote) os << "*";
            os << ctx_->name(i);
            if (t.exps[i] != 1) os << "^" << t.exps[i];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t var) {
    if (!f.context() || var >= f.context()->size()) throw IndexOutOfRange("partial_derivative: variable index out of range");
    std::vector<Term> out;
    out.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        if (t.exps[var] == 0) continue;
        Term d{t.exps, t.coeff * t.exps[var]};
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    // Lowering one fixed coordinate keeps the relative order.
    return LaurentPoly::from_sorted_terms(f.context(), std::move(out));
}

LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var) {
    return partial_derivative(f, f.context()->index(var));
}

LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment) {
    const auto& src = f.context();
    ContextPtr target = src;
    for (const auto& [name, image] : assignment) {
        src->index(name);
        if (target == src) target = image.context();
        else if (!(*target == *image.context())) throw ContextMismatch();
    }
    std::vector<const LaurentPoly*> images(src->size(), nullptr);
    for (std::size_t i = 0; i < src->size(); ++i) {
        auto it = assignment.find(src->name(i));
        if (it != assignment.end()) images[i] = &it->second;
    }
    // Memoized powers per variable; unassigned variables map to themselves in the target.
    std::vector<std::map<int, LaurentPoly>> powers(src->size());
    auto power_of = [&](std::size_t v, int k) -> const LaurentPoly& {
        auto it = powers[v].find(k);
        if (it != powers[v].end()) return it->second;
        if (!images[v]) return powers[v].emplace(k, LaurentPoly::variable(target, src->name(v), k)).first->second;
        if (k < 0 && !images[v]->is_monomial()) throw NonUnitSubstitution(src->name(v));
        return powers[v].emplace(k, images[v]->pow(k)).first->second;
    };
    LaurentPoly result(target);
    for (const auto& t : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(target, t.coeff);
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] == 0) continue;
            term *= power_of(v, t.exps[v]);
        }
        result += term;
    }
    return result;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (!f.is_zero() && f.context() != g.context() && !(*f.context() == *g.context())) throw ContextMismatch();
    const ContextPtr& ctx = g.context();
    if (f.is_zero()) return LaurentPoly(ctx);
    if (g.is_monomial()) {
        const Term& m = g.leading_term();
        Exponents inv = m.exps;
        for (auto& x : inv) x = -x;
        return f.times_monomial(inv, 1 / m.coeff);
    }

    // Strip the monomial content of both sides; the remaining divisor has no monomial
    // factor, so Laurent divisibility reduces to polynomial divisibility.
    const Exponents fmin = f.min_exponents();
    const Exponents gmin = g.min_exponents();
    Exponents neg_f = fmin, neg_g = gmin;
    for (auto& x : neg_f) x = -x;
    for (auto& x : neg_g) x = -x;
    const LaurentPoly fp = f.times_monomial(neg_f);
    const LaurentPoly gp = g.times_monomial(neg_g);

    const auto greater = [](const Exponents& a, const Exponents& b) { return grlex_greater(a, b); };
    std::map<Exponents, Rational, decltype(greater)> rem(greater);
    for (const auto& t : fp.terms()) rem.emplace(t.exps, t.coeff);

    const Term& lead = gp.leading_term();
    const std::size_t nv = ctx->size();
    std::vector<Term> quotient;
    Exponents shift(nv);
    while (!rem.empty()) {
        auto top = rem.begin();
        for (std::size_t i = 0; i < nv; ++i) {
            shift[i] = top->first[i] - lead.exps[i];
            if (shift[i] < 0) return std::nullopt;
        }
        const Rational c = top->second / lead.coeff;
        for (const auto& t : gp.terms()) {
            Exponents e(nv);
            for (std::size_t i = 0; i < nv; ++i) e[i] = t.exps[i] + shift[i];
            auto [it, inserted] = rem.try_emplace(std::move(e), 0);
            it->second -= c * t.coeff;
            if (it->second == 0) rem.erase(it);
        }
        quotient.push_back(Term{shift, c});
    }
    LaurentPoly q = LaurentPoly::from_terms(ctx, std::move(quotient));
    Exponents back(nv);
    for (std::size_t i = 0; i < nv; ++i) back[i] = fmin[i] - gmin[i];
    return q.times_monomial(back);
}

Rational evaluate(const LaurentPoly& f, const std::vector<Rational>& point) {
    const auto& ctx = f.context();
    if (f.is_zero()) return 0;
    if (point.size() != ctx->size()) throw InvalidInput("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& t : f.terms()) {
        Rational term = t.coeff;
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            const int e = t.exps[v];
            if (e == 0) continue;
            if (point[v] == 0) {
                if (e < 0) throw ZeroAtNegativePower(ctx->name(v));
                term = 0;
                break;
            }
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[v].get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            mpz_pow_ui(p.get_den_mpz_t(), point[v].get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            p.canonicalize();
            if (e < 0) p = 1 / p;
            term *= p;
        }
        sum += term;
    }
    return sum;
}

Rational evaluate(const LaurentPoly& f, const std::map<std::string, Rational>& point) {
    if (f.is_zero()) return 0;
    const auto& ctx = f.context();
    std::vector<Rational> values(ctx->size(), Rational(0));
    std::vector<bool> used(ctx->size(), false);
    for (const auto& t : f.terms())
        for (std::size_t v = 0; v < t.exps.size(); ++v)
            if (t.exps[v] != 0) used[v] = true;
    for (std::size_t v = 0; v < ctx->size(); ++v) {
        auto it = point.find(ctx->name(v));
        if (it != point.end()) values[v] = it->second;
        else if (used[v]) throw UnknownVariable(ctx->name(v));
    }
    return evaluate(f, values);
}

nlohmann::json to_json(const LaurentPoly& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (std::size_t v = 0; v < t.exps.size(); ++v)
            if (t.exps[v] != 0) exps[f.context()->name(v)] = t.exps[v];
        out.push_back({{"coeff", to_string(t.coeff)}, {"exps", std::move(exps)}});
    }
    return out;
}

LaurentPoly laurent_from_json(const ContextPtr& ctx, const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("coeff")) throw InvalidInput("polynomial term needs a 'coeff' field");
        Term t{Exponents(ctx->size(), 0), 0};
        const auto& c = item.at("coeff");
        t.coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        if (item.contains("exps")) {
            for (const auto& [name, e] : item.at("exps").items()) t.exps[ctx->index(name)] = e.get<std::int32_t>();
        }
        terms.push_back(std::move(t));
    }
    return LaurentPoly::from_terms(ctx, std::move(terms));
}

}  // namespace clusterbd
