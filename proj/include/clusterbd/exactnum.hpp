#pragma once

// Exact rational scalars and dense rational matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace clusterbd {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Builds p/q in canonical form.
Rational make_rational(long p, long q = 1);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& rhs) const;
    QVector operator*(const QVector& v) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix scaled(const Rational& s) const;

    /// Columns [first, first + count).
    QMatrix column_block(std::size_t first, std::size_t count) const;
    /// Copy with `extra_rows` zero rows appended at the bottom and `extra_cols` zero columns on the right.
    QMatrix padded(std::size_t extra_rows, std::size_t extra_cols) const;

    bool is_zero() const;
    bool is_skew_symmetric() const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Rank over Q by fraction-free elimination.
std::size_t rank(const QMatrix& m);

struct AffineSolution {
    QVector particular;
    std::vector<QVector> kernel;
};

/// Solves A x = b. Returns std::nullopt when the system is inconsistent. The particular
/// solution sets every free unknown to zero; the kernel basis has one vector per free column.
std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b);

/// Basis of { x : A x = 0 }.
std::vector<QVector> kernel_basis(const QMatrix& a);

/// JSON: array of rows, each entry a string "p/q" or "p".
nlohmann::json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const nlohmann::json& j);

}  // namespace clusterbd
