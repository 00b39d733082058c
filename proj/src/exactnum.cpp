#include "clusterbd/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace clusterbd {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

// Fraction-free row echelon form. Rows are first scaled to integers; row scaling
// does not change the row space, so rank and solution sets are preserved.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon bareiss_echelon(const QMatrix& m) {
    Echelon e;
    const std::size_t nr = m.rows(), nc = m.cols();
    e.rows.assign(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t k = 0;
    for (std::size_t c = 0; c < nc && k < nr; ++c) {
        std::size_t p = k;
        while (p < nr && e.rows[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(e.rows[p], e.rows[k]);
        const mpz_class& piv = e.rows[k][c];
        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                mpz_class t = piv * e.rows[i][j] - e.rows[i][c] * e.rows[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = std::move(t);
            }
            e.rows[i][c] = 0;
        }
        // Rows above k keep their old values; only the trailing block is needed.
        prev = piv;
        e.pivot_cols.push_back(c);
        ++k;
    }
    e.rows.resize(k);
    return e;
}

// Reduced row echelon form over Q of the echelon rows.
std::vector<std::vector<Rational>> reduce(const Echelon& e) {
    const std::size_t r = e.rows.size();
    std::vector<std::vector<Rational>> red(r);
    for (std::size_t i = 0; i < r; ++i) {
        red[i].reserve(e.rows[i].size());
        for (const auto& z : e.rows[i]) red[i].emplace_back(z);
    }
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = e.pivot_cols[i];
        const Rational piv = red[i][pc];
        for (auto& x : red[i]) x /= piv;
        for (std::size_t up = 0; up < i; ++up) {
            const Rational f = red[up][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < red[up].size(); ++j) red[up][j] -= f * red[i][j];
        }
    }
    return red;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(parse_integer(text));
    } else {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        q = Rational(num, den);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long p, long q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("QMatrix: entry count does not match shape");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.front().size() : 0;
    QMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("QMatrix::from_ints: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix product: shape mismatch");
    QMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    return p;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("QMatrix-vector product: shape mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix sum: shape mismatch");
    QMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += rhs.entries_[i];
    return s;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const { return *this + rhs.scaled(-1); }

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix out = *this;
    for (auto& x : out.entries_) x *= s;
    return out;
}

QMatrix QMatrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("QMatrix::column_block");
    QMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

QMatrix QMatrix::padded(std::size_t extra_rows, std::size_t extra_cols) const {
    QMatrix out(rows_ + extra_rows, cols_ + extra_cols);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

bool QMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

std::size_t rank(const QMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs length differs from row count");
    const std::size_t n = a.cols();
    QMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Echelon e = bareiss_echelon(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;
    const auto red = reduce(e);

    AffineSolution sol;
    sol.particular.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        is_pivot[e.pivot_cols[i]] = true;
        sol.particular[e.pivot_cols[i]] = red[i][n];
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector k(n);
        k[f] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) k[e.pivot_cols[i]] = -red[i][f];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
    return solve_affine(a, QVector(a.rows()))->kernel;
}

nlohmann::json to_json(const QMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix qmatrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("QMatrix JSON must be an array of rows");
    const std::size_t nr = j.size();
    const std::size_t nc = nr ? j[0].size() : 0;
    QMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (!j[i].is_array() || j[i].size() != nc) throw std::invalid_argument("QMatrix JSON: ragged rows");
        for (std::size_t k = 0; k < nc; ++k) {
            const auto& x = j[i][k];
            if (x.is_string()) m(i, k) = parse_rational(x.get<std::string>());
            else if (x.is_number_integer()) m(i, k) = Rational(x.get<long>());
            else throw std::invalid_argument("QMatrix JSON: entries must be strings or integers");
        }
    }
    return m;
}

}  // namespace clusterbd
