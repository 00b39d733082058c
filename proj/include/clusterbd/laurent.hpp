#pragma once

// Sparse multivariate Laurent polynomials over Q.
//
// Terms are stored sorted by descending graded-lexicographic order on exponent
// vectors (total degree first, then the first differing exponent decides), with no
// zero coefficients. Two polynomials are equal iff their term lists are equal.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusterbd/errors.hpp"
#include "clusterbd/exactnum.hpp"

namespace clusterbd {

class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const;
    /// Throws UnknownVariable.
    std::size_t index(const std::string& name) const;

    bool operator==(const VarContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);

/// Context x11, x12, ..., xnn (row-major), optionally followed by extra names.
ContextPtr matrix_context(int n, const std::vector<std::string>& extra = {});

using Exponents = std::vector<std::int32_t>;

struct Term {
    Exponents exps;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

/// True when a precedes b in the descending term order.
bool grlex_greater(const Exponents& a, const Exponents& b);

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly constant(ContextPtr ctx, const Rational& c);
    static LaurentPoly variable(ContextPtr ctx, const std::string& name, std::int32_t power = 1);
    static LaurentPoly monomial(ContextPtr ctx, Exponents exps, const Rational& coeff = 1);
    /// Merges duplicate exponents, drops zeros and sorts.
    static LaurentPoly from_terms(ContextPtr ctx, std::vector<Term> terms);
    /// Adopts terms that are already canonical (sorted, distinct, nonzero); not re-checked.
    static LaurentPoly from_sorted_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term value; throws if the polynomial is not constant.
    Rational constant_value() const;
    const Term& leading_term() const { return terms_.front(); }
    /// Componentwise minimum of the exponent vectors (zero vector for the zero polynomial).
    Exponents min_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator*(const Rational& s) const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(const LaurentPoly& g);

    /// Multiplies by the monomial with exponent vector `exps` and coefficient `coeff`.
    LaurentPoly times_monomial(const Exponents& exps, const Rational& coeff = 1) const;
    /// Nonnegative power; negative powers are allowed only for monomials.
    LaurentPoly pow(int k) const;

    /// Same polynomial in another context containing every variable that occurs here.
    LaurentPoly embed(const ContextPtr& target) const;

    bool operator==(const LaurentPoly& g) const;

    std::string to_string() const;

private:
    void require_same_context(const LaurentPoly& g) const;

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

inline LaurentPoly operator*(const Rational& s, const LaurentPoly& f) { return f * s; }

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t var);
LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var);

/// Replaces variables by images living in a common target context. Unassigned variables keep
/// their name and must exist in the target context. Throws NonUnitSubstitution when a variable
/// with a negative exponent is mapped to a non-monomial.
LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment);

/// Exact quotient f / g in the Laurent ring, or std::nullopt when g does not divide f.
/// Throws DivisionByZero when g is zero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Evaluates at a point given by variable name. Throws UnknownVariable for unassigned
/// variables that occur and ZeroAtNegativePower for zeros at negative exponents.
Rational evaluate(const LaurentPoly& f, const std::map<std::string, Rational>& point);
/// Evaluates at a point given positionally (one value per context variable).
Rational evaluate(const LaurentPoly& f, const std::vector<Rational>& point);

/// JSON list of {"coeff": "p/q", "exps": {"x11": 1, ...}}; omitted exponents are zero.
nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const ContextPtr& ctx, const nlohmann::json& j);

}  // namespace clusterbd
