#pragma once

// The Sklyanin bracket on functions of the matrix entries x_ij, its twist by a Cartan
// torus term, coefficient-matrix extraction and the supporting checks.

#include <optional>
#include <string>
#include <vector>

#include "clusterbd/exactnum.hpp"
#include "clusterbd/laurent.hpp"
#include "clusterbd/rmatrix.hpp"

namespace clusterbd {

/// Correction term <V (aR(f) + aL(f)), aR(g) + aL(g)> with V = [[V1, V12], [-V12^T, V2]],
/// where aR(f)_m and aL(f)_m are the left and right derivatives of f along basis element h_m.
struct Twist {
    std::vector<QVector> h_basis;
    QMatrix v1, v2, v12;

    /// The 2k x 2k block matrix V. Throws InvalidInput on bad shapes or non-skew V1, V2.
    QMatrix block() const;
};

struct BracketSpec {
    int n = 2;
    RTensor r;
    std::optional<Twist> twist;
};

/// Left and right invariant derivatives of f along every matrix unit, cached per function.
/// R[a*n+b] = sum_j x_bj df/dx_aj and L[a*n+b] = sum_i x_ia df/dx_ib.
struct FieldCache {
    std::vector<LaurentPoly> R, L;
    /// Contractions with r: Rr[ab] = sum_cd r_{ab,cd} R[cd], likewise Lr.
    std::vector<LaurentPoly> Rr, Lr;
    /// Derivatives along the twist basis (empty without a twist).
    std::vector<LaurentPoly> aR, aL;
};

class BracketEngine {
public:
    /// `ctx` must contain the names x11..xnn; other variables are treated as constants.
    BracketEngine(BracketSpec spec, ContextPtr ctx);

    const BracketSpec& spec() const { return spec_; }
    const ContextPtr& context() const { return ctx_; }

    FieldCache fields(const LaurentPoly& f) const;
    LaurentPoly bracket(const FieldCache& f, const FieldCache& g) const;
    LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g) const;

private:
    BracketSpec spec_;
    ContextPtr ctx_;
    std::vector<std::size_t> var_;  // context index of x_ij at i*n+j
    std::vector<std::size_t> rows_;  // ab with a nonzero row of r
    QMatrix v_;
};

/// {f, g} in the context of f (both arguments must share it).
LaurentPoly sklyanin_bracket(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g);

struct Extraction {
    std::optional<QMatrix> omega;
    /// First failing pair (lexicographic) when omega is absent.
    std::size_t bad_i = 0, bad_j = 0;
    LaurentPoly bracket;
    /// Non-constant quotient {P_i, P_j} / (P_i P_j), or absent when not divisible.
    std::optional<LaurentPoly> residue;

    explicit operator bool() const { return omega.has_value(); }
};

/// omega_ij = {P_i, P_j} / (P_i P_j) when every quotient is constant. Pairs run in parallel.
Extraction extract_coefficient_matrix(const BracketSpec& spec, const std::vector<LaurentPoly>& basis);

/// All brackets {x_ij, x_kl} vanish at X = I.
bool poisson_lie_at_identity(const BracketSpec& spec);

struct MultiplicativityReport {
    bool ok = true;
    std::string witness;
};

/// Checks that multiplication G x G -> G is Poisson: {z_ij, z_kl} for Z = XY computed in the
/// product bracket equals the bracket of coordinates evaluated at Z.
MultiplicativityReport check_multiplicativity(const BracketSpec& spec);

/// Diagonal torus acting on one side: entry i is a Laurent monomial in the named parameters.
struct TorusAction {
    std::vector<std::string> params;
    std::vector<LaurentPoly> diagonal;
};

/// Torus diag(prod_m t_m^{h_m[i]}) for an integral basis h of h_T, parameters named as given.
TorusAction torus_from_basis(const std::vector<QVector>& basis, const std::vector<std::string>& params);

struct Weights {
    QVector eta;
    QVector zeta;
};

/// Substitutes X -> H1 X H2 and reads off the exponents of H1 and H2, if P is equivariant.
std::optional<Weights> check_equivariance(const LaurentPoly& p, const TorusAction& left, const TorusAction& right);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
LaurentPoly jacobi_spot_check(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h);

/// Rank of the Jacobian of the basis with respect to x_ij, evaluated at the n x n point.
std::size_t jacobian_independence(const std::vector<LaurentPoly>& basis, const QMatrix& point);

}  // namespace clusterbd
