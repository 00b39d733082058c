#pragma once

// Elements of gl_n (x) gl_n and gl_n (x) gl_n (x) gl_n in the basis of matrix units,
// the Casimir element, Belavin-Drinfeld r-matrix assembly and the CYBE check.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clusterbd/exactnum.hpp"
#include "clusterbd/rootdata.hpp"

namespace clusterbd {

/// Sparse sum of coeff * e_ab (x) e_cd, keys (a, b, c, d) 0-based.
class RTensor {
public:
    using Key = std::array<int, 4>;

    RTensor() = default;
    explicit RTensor(int n) : n_(n) {}

    /// e_ab (x) e_cd.
    static RTensor unit(int n, int a, int b, int c, int d, const Rational& coeff = 1);
    /// e_ab ^ e_cd = e_ab (x) e_cd - e_cd (x) e_ab.
    static RTensor wedge(int n, int a, int b, int c, int d, const Rational& coeff = 1);

    int n() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(const Key& k) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Rational& v);
    RTensor operator+(const RTensor& o) const;
    RTensor operator-(const RTensor& o) const;
    RTensor scaled(const Rational& s) const;
    /// Flips the two tensor legs.
    RTensor swapped() const;

    bool operator==(const RTensor& o) const = default;
    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Key, Rational> terms_;
};

/// Sparse sum over e_ab (x) e_cd (x) e_ef, keys 0-based.
class RTensor3 {
public:
    using Key = std::array<int, 6>;

    explicit RTensor3(int n) : n_(n) {}
    int n() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const Rational& v);
    RTensor3& operator+=(const RTensor3& o);

private:
    int n_;
    std::map<Key, Rational> terms_;
};

struct Casimir {
    RTensor t;
    RTensor t0;
};

/// Casimir element of sl_n for the trace form, and its Cartan component.
Casimir casimir(int n);

struct R0Solution {
    RTensor particular;
    std::vector<RTensor> freedom;
};

/// Diagonal solutions of the r0 equations. The particular solution is t0/2 when that works,
/// which is the case exactly for the trivial triple.
R0Solution solve_r0(const BDTriple& t);

/// Empty when r0 is a Cartan tensor satisfying the r0 equations for t, otherwise a reason.
std::string r0_violation(const BDTriple& t, const RTensor& r0);

/// r0 + sum e_{-a} (x) e_a + sum_{a <_T b} e_{-a} ^ e_b. Throws InvalidInput for a bad r0.
RTensor assemble_r(const BDTriple& t, const RTensor& r0);

/// The three-sum expression [r12, r13] + [r12, r23] + [r13, r23].
RTensor3 cybe_tensor(const RTensor& r);

struct CybeReport {
    bool cybe = false;
    bool unitarity = false;
    std::size_t cybe_terms = 0;
    bool ok() const { return cybe && unitarity; }
};

CybeReport check_cybe_unitarity(const RTensor& r);

struct AdReport {
    std::vector<RTensor::Key> violations;
    bool ok() const { return violations.empty(); }
};

/// Every term e_ab (x) e_cd must have weight eps_a - eps_b + eps_c - eps_d vanishing on h.
AdReport check_ad_invariance(const RTensor& r, const CartanSubspace& h);

/// List of {"a", "b", "c", "d", "coeff"} with 1-based indices; the envelope carries n.
nlohmann::json to_json(const RTensor& r);
RTensor rtensor_from_json(const nlohmann::json& j);

}  // namespace clusterbd
