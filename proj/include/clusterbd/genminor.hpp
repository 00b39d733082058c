#pragma once

// Gauss factorization, generalized minors of SL_n, and the initial cluster attached to a
// double reduced word of the longest Weyl group element.

#include <optional>
#include <vector>

#include "clusterbd/exactnum.hpp"
#include "clusterbd/laurent.hpp"

namespace clusterbd {

/// Permutation of {0..n-1}; perm[i] is the image of i.
struct WeylElement {
    std::vector<int> perm;

    static WeylElement identity(int n);
    /// Simple reflection s_k (1-based k) swapping k-1 and k.
    static WeylElement simple(int n, int k);
    static WeylElement longest(int n);

    int n() const { return static_cast<int>(perm.size()); }
    /// Composition: (u * v)(i) = u(v(i)).
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    /// Number of inversions.
    int length() const;
    /// Sorted image of {0..i-1}.
    std::vector<int> image_of_prefix(int i) const;

    bool operator==(const WeylElement&) const = default;
};

struct GaussFactors {
    QMatrix lower;     // unipotent lower triangular
    QMatrix diagonal;
    QMatrix upper;     // unipotent upper triangular
};

/// X = X- X0 X+; std::nullopt when some leading principal minor vanishes.
std::optional<GaussFactors> gauss_factorize(const QMatrix& x);

/// Determinant of the submatrix of x_ab with the given rows and columns (0-based), as a
/// polynomial in matrix_context(n).
LaurentPoly minor_polynomial(const ContextPtr& ctx, const std::vector<int>& rows, const std::vector<int>& cols);

/// Minor with rows u([1..i]) and columns v([1..i]), scaled so the leading coefficient is +1.
LaurentPoly generalized_minor(const ContextPtr& ctx, const WeylElement& u, const WeylElement& v, int i);

/// Letters over +-[n-1]. entries[p] is i_k for k = p-(n-1) when p < n-1 and k = p-(n-2) otherwise,
/// so the first n-1 letters are i_{-(n-1)}, ..., i_{-1}.
struct DoubleWord {
    int n = 2;
    std::vector<int> entries;

    int letter(int k) const;
    /// l(w0) = n(n-1)/2.
    int half_length() const { return n * (n - 1) / 2; }
};

/// Throws InvalidInput unless the word has the documented shape.
void validate_double_word(const DoubleWord& w);

struct PrefixElements {
    WeylElement u;
    WeylElement v;
};

/// (u_{<=k}, v_{>k}) for k in -[n-1] or [2 l(w0)]. Throws IndexOutOfRange otherwise.
PrefixElements word_prefix_elements(const DoubleWord& w, int k);

struct InitialCluster {
    /// Word positions k in increasing order, with their minors Delta(k).
    std::vector<int> positions;
    std::vector<LaurentPoly> variables;
    /// Indices into `variables` of the stable minors.
    std::vector<std::size_t> stable;
    /// Weights u_{<=k} w and v_{>k} w in epsilon coordinates (length n).
    std::vector<QVector> left_weights, right_weights;
};

InitialCluster initial_cluster(const DoubleWord& w);

/// Pairs epsilon-coordinate weights with the simple coroots e_kk - e_{k+1,k+1}.
QVector coroot_coordinates(const QVector& weight);

/// {"n": 3, "word": [-2, -1, ...]}.
nlohmann::json to_json(const DoubleWord& w);
DoubleWord double_word_from_json(const nlohmann::json& j);

}  // namespace clusterbd
