#include "clusterbd/genminor.hpp"

#include <algorithm>
#include <numeric>

#include "clusterbd/errors.hpp"

namespace clusterbd {

WeylElement WeylElement::identity(int n) {
    WeylElement w{std::vector<int>(n)};
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

WeylElement WeylElement::simple(int n, int k) {
    if (k < 1 || k >= n) throw IndexOutOfRange("simple reflection index out of range");
    WeylElement w = identity(n);
    std::swap(w.perm[k - 1], w.perm[k]);
    return w;
}

WeylElement WeylElement::longest(int n) {
    WeylElement w{std::vector<int>(n)};
    for (int i = 0; i < n; ++i) w.perm[i] = n - 1 - i;
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (o.n() != n()) throw InvalidInput("Weyl elements of different rank");
    WeylElement w{std::vector<int>(n())};
    for (int i = 0; i < n(); ++i) w.perm[i] = perm[o.perm[i]];
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w{std::vector<int>(n())};
    for (int i = 0; i < n(); ++i) w.perm[perm[i]] = i;
    return w;
}

int WeylElement::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

std::vector<int> WeylElement::image_of_prefix(int i) const {
    std::vector<int> out(perm.begin(), perm.begin() + i);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<GaussFactors> gauss_factorize(const QMatrix& x) {
    const std::size_t n = x.rows();
    if (x.cols() != n) throw InvalidInput("Gauss factorization needs a square matrix");
    QMatrix a = x;
    QMatrix lower = QMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) return std::nullopt;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            lower(i, k) = f;
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    GaussFactors g{lower, QMatrix(n, n), QMatrix::identity(n)};
    for (std::size_t k = 0; k < n; ++k) {
        g.diagonal(k, k) = a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) g.upper(k, j) = a(k, j) / a(k, k);
    }
    return g;
}

LaurentPoly minor_polynomial(const ContextPtr& ctx, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw InvalidInput("minor needs equally many rows and columns");
    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Term> terms;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] > idx[b]) ++inversions;
        Exponents e(ctx->size(), 0);
        for (std::size_t a = 0; a < idx.size(); ++a)
            e[ctx->index("x" + std::to_string(rows[a] + 1) + std::to_string(cols[idx[a]] + 1))] += 1;
        terms.push_back({std::move(e), inversions % 2 ? -1 : 1});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return LaurentPoly::from_terms(ctx, std::move(terms));
}

LaurentPoly generalized_minor(const ContextPtr& ctx, const WeylElement& u, const WeylElement& v, int i) {
    if (i < 1 || i >= u.n()) throw IndexOutOfRange("fundamental weight index out of range");
    LaurentPoly m = minor_polynomial(ctx, u.image_of_prefix(i), v.image_of_prefix(i));
    if (m.leading_term().coeff < 0) m = -m;
    return m;
}

int DoubleWord::letter(int k) const {
    const int r = n - 1;
    if (k < 0 && k >= -r) return entries.at(k + r);
    if (k >= 1 && k <= 2 * half_length()) return entries.at(k - 1 + r);
    throw IndexOutOfRange("word position out of range");
}

void validate_double_word(const DoubleWord& w) {
    const int r = w.n - 1;
    if (w.n < 2) throw InvalidInput("double word needs n >= 2");
    if (static_cast<int>(w.entries.size()) != 2 * w.half_length() + r)
        throw InvalidInput("double word must have length 2 l(w0) + n - 1");
    for (int p = 0; p < r; ++p)
        if (w.entries[p] != p - r) throw InvalidInput("double word must start with -(n-1), ..., -1");
    WeylElement pos = WeylElement::identity(w.n), neg = pos;
    int pos_count = 0, neg_count = 0;
    for (int p = r; p < static_cast<int>(w.entries.size()); ++p) {
        const int letter = w.entries[p];
        if (letter == 0 || std::abs(letter) > r) throw InvalidInput("double word letter out of range");
        if (letter > 0) {
            pos = pos * WeylElement::simple(w.n, letter);
            ++pos_count;
        } else {
            neg = neg * WeylElement::simple(w.n, -letter);
            ++neg_count;
        }
    }
    const WeylElement w0 = WeylElement::longest(w.n);
    if (pos_count != w.half_length() || !(pos == w0) || neg_count != w.half_length() || !(neg == w0))
        throw InvalidInput("positive and negative subwords must be reduced words for w0");
}

PrefixElements word_prefix_elements(const DoubleWord& w, int k) {
    const int r = w.n - 1, total = 2 * w.half_length();
    if (k < 0 && k >= -r) return {WeylElement::identity(w.n), WeylElement::longest(w.n)};
    if (k < 1 || k > total) throw IndexOutOfRange("word position out of range");
    PrefixElements out{WeylElement::identity(w.n), WeylElement::identity(w.n)};
    for (int l = 1; l <= k; ++l)
        if (w.letter(l) < 0) out.u = out.u * WeylElement::simple(w.n, -w.letter(l));
    for (int l = total; l >= k + 1; --l)
        if (w.letter(l) > 0) out.v = out.v * WeylElement::simple(w.n, w.letter(l));
    return out;
}

InitialCluster initial_cluster(const DoubleWord& w) {
    validate_double_word(w);
    const int r = w.n - 1, total = 2 * w.half_length();
    const ContextPtr ctx = matrix_context(w.n);
    std::vector<int> last(w.n, 0);
    for (int k = 1; k <= total; ++k) last[std::abs(w.letter(k))] = k;
    InitialCluster c;
    auto weight = [&](const WeylElement& x, int i) {
        QVector v(w.n);
        for (int a : x.image_of_prefix(i)) v[a] = 1;
        return v;
    };
    for (int k = -r; k <= total; ++k) {
        if (k == 0) continue;
        const int i = std::abs(w.letter(k));
        const auto [u, v] = word_prefix_elements(w, k);
        if (k < 0 || last[i] == k) c.stable.push_back(c.variables.size());
        c.positions.push_back(k);
        c.variables.push_back(generalized_minor(ctx, u, v, i));
        c.left_weights.push_back(weight(u, i));
        c.right_weights.push_back(weight(v, i));
    }
    return c;
}

QVector coroot_coordinates(const QVector& weight) {
    QVector out;
    for (std::size_t k = 0; k + 1 < weight.size(); ++k) out.push_back(weight[k] - weight[k + 1]);
    return out;
}

nlohmann::json to_json(const DoubleWord& w) { return {{"n", w.n}, {"word", w.entries}}; }

DoubleWord double_word_from_json(const nlohmann::json& j) {
    try {
        DoubleWord w{j.at("n").get<int>(), j.at("word").get<std::vector<int>>()};
        validate_double_word(w);
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("double word JSON: ") + e.what());
    }
}

}  // namespace clusterbd
