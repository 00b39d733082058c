#pragma once

// Seeds of geometric type, matrix mutation, the exchange relation and the
// Poisson/toric compatibility checks. Indices are 0-based throughout the library;
// the CLI converts from 1-based user input.

#include <optional>
#include <string>
#include <vector>

#include "clusterbd/exactnum.hpp"
#include "clusterbd/laurent.hpp"

namespace clusterbd {

/// Integer n x (n+m) matrix whose leading n x n block is skew-symmetric.
class ExtExchangeMatrix {
public:
    ExtExchangeMatrix() = default;
    /// Throws InvalidInput on ragged rows, a wrong column count or a non-skew principal part.
    explicit ExtExchangeMatrix(std::vector<std::vector<long>> rows, std::size_t stable_count);
    /// Infers m from the column count.
    static ExtExchangeMatrix from_rows(std::vector<std::vector<long>> rows);

    std::size_t n() const { return rows_.size(); }
    std::size_t m() const { return m_; }
    std::size_t cols() const { return rows_.size() + m_; }

    long operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<long>>& rows() const { return rows_; }

    QMatrix to_qmatrix() const;
    /// Drops the rightmost (stable) column.
    ExtExchangeMatrix without_last_column() const;

    bool operator==(const ExtExchangeMatrix&) const = default;

private:
    std::vector<std::vector<long>> rows_;
    std::size_t m_ = 0;
};

struct Seed {
    ExtExchangeMatrix matrix;
    std::vector<std::string> names;
    /// Images of the extended cluster, one per column of the matrix, in one context.
    std::vector<LaurentPoly> variables;
};

/// Throws InvalidInput when the shapes disagree or the variables use different contexts.
void validate_seed(const Seed& seed);

/// Matrix mutation in mutable direction k. Throws IndexOutOfRange for k >= n.
ExtExchangeMatrix mutate_matrix(const ExtExchangeMatrix& b, std::size_t k);

struct ExchangeResult {
    /// M+ + M-, the right-hand side of the exchange relation.
    LaurentPoly numerator;
    LaurentPoly denominator;
    /// numerator / denominator when it is a Laurent polynomial.
    std::optional<LaurentPoly> quotient;

    /// Exact divisibility in the Laurent ring (monomial denominators always divide).
    bool regular() const { return quotient.has_value(); }
    /// Regular and free of negative exponents, i.e. an honest polynomial.
    bool polynomial() const;
};

/// New variable in direction k from the exchange relation; empty products are 1.
/// Throws IndexOutOfRange for a stable k and DivisionByZero for a zero variable.
ExchangeResult exchange_variable(const Seed& seed, std::size_t k);

/// Seed mutation; throws InvalidInput when the new variable is not a Laurent polynomial.
Seed mutate_seed(const Seed& seed, std::size_t k);

struct CompatibilityResult {
    bool compatible = false;
    /// B * Omega.
    QMatrix product;
    /// Diagonal of D when compatible.
    QVector diagonal;
    /// First offending entry when not compatible.
    std::size_t bad_row = 0, bad_col = 0;
    std::string reason;

    explicit operator bool() const { return compatible; }
};

/// Succeeds iff B * Omega = (D 0) with D diagonal and nonsingular.
CompatibilityResult check_compatibility(const ExtExchangeMatrix& b, const QMatrix& omega);

struct WeightAssignment {
    std::vector<QVector> eta;
    std::vector<QVector> zeta;
};

struct ToricReport {
    std::size_t eta_span = 0;
    std::size_t zeta_span = 0;
    std::size_t expected_span = 0;
    std::vector<std::size_t> eta_failures;   // mutable rows with sum b_ij eta_j != 0
    std::vector<std::size_t> zeta_failures;

    bool span_ok() const { return eta_span == expected_span && zeta_span == expected_span; }
    bool balance_ok() const { return eta_failures.empty() && zeta_failures.empty(); }
    bool ok() const { return span_ok() && balance_ok(); }
};

ToricReport check_toric_weights(const ExtExchangeMatrix& b, const WeightAssignment& w, std::size_t k_t);

struct RankReport {
    std::size_t rank = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t expected_stable = 0;

    bool ok() const { return rank == n && m == expected_stable; }
};

RankReport check_full_rank_and_count(const ExtExchangeMatrix& b, std::size_t expected_stable);

/// {"n", "m", "Btilde", "context", "variables": [{"name", "poly"}]}.
nlohmann::json to_json(const Seed& seed);
/// "context" is optional; without it the variable order is the order of first appearance.
Seed seed_from_json(const nlohmann::json& j);

}  // namespace clusterbd
