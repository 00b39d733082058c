#pragma once

// Root system of type A_{n-1}, Belavin-Drinfeld triples, the order they induce on
// positive roots, and the Cartan subspace h_T.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterbd/errors.hpp"
#include "clusterbd/exactnum.hpp"

namespace clusterbd {

/// Positive root eps_i - eps_j with 0 <= i < j < n. Simple root alpha_k (1-based k) is (k-1, k).
struct Root {
    int i = 0;
    int j = 0;

    auto operator<=>(const Root&) const = default;
};

Root simple_root(int k);
/// Simple-root indices (1-based) in the support of a positive root.
std::vector<int> simple_support(const Root& r);
std::string to_string(const Root& r);

class RootSystemA {
public:
    explicit RootSystemA(int n);
    int n() const { return n_; }
    int rank() const { return n_ - 1; }
    /// Ordered by height, then by the first index.
    const std::vector<Root>& positive_roots() const { return positive_; }

private:
    int n_;
    std::vector<Root> positive_;
};

/// gamma maps simple-root indices of Gamma1 to those of Gamma2 (1-based).
struct BDTriple {
    int n = 2;
    std::map<int, int> gamma;

    std::vector<int> gamma1() const;
    std::vector<int> gamma2() const;
    bool operator==(const BDTriple&) const = default;
};

struct TripleCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Checks index ranges, injectivity, the isometry condition and nilpotency.
TripleCheck validate_bd_triple(const BDTriple& t);

/// Pairs (alpha, beta) with beta = gamma^j(alpha), j >= 1, where gamma is extended additively
/// to the roots whose support lies in Gamma1. Sorted.
std::vector<std::pair<Root, Root>> bd_partial_order(const BDTriple& t);

struct CartanSubspace {
    /// Each basis element is the diagonal of a traceless n x n matrix.
    std::vector<QVector> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Value of a root on a diagonal matrix.
Rational root_value(const Root& r, const QVector& diagonal);

/// h_T inside the traceless diagonals. Throws std::logic_error if dim differs from n-1-|Gamma1|.
CartanSubspace h_T(const BDTriple& t);
std::size_t k_T(const BDTriple& t);

/// Swaps Gamma1 and Gamma2 and reverses gamma.
BDTriple inverse_triple(const BDTriple& t);
/// Applies the diagram automorphism alpha_k -> alpha_{n-k}.
BDTriple flipped_triple(const BDTriple& t);

/// {"n": 4, "gamma": {"2": "1", "3": "2"}}; values may be strings or integers.
nlohmann::json to_json(const BDTriple& t);
BDTriple triple_from_json(const nlohmann::json& j);

}  // namespace clusterbd
