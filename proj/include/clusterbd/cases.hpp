#pragma once

// Catalog of the worked examples (SL2, SL3 and SL4) and the pipeline that re-derives
// every printed matrix, sign and weight list from first principles.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterbd/cluster.hpp"
#include "clusterbd/genminor.hpp"
#include "clusterbd/rmatrix.hpp"
#include "clusterbd/rootdata.hpp"
#include "clusterbd/sklyanin.hpp"

namespace clusterbd {

using IntRows = std::vector<std::vector<long>>;

/// Entry (i, j) is the (j, i) cofactor, so X * adj(X) = det(X) * I. Polynomials live in
/// matrix_context(n).
std::vector<std::vector<LaurentPoly>> adjugate_polynomials(int n);

enum class CaseKind { BelavinDrinfeld, Triangular, Trivial };

/// A single printed entry that had to be corrected (0-based position).
struct MatrixErratum {
    std::size_t row = 0, col = 0;
    long printed = 0, corrected = 0;
};

struct ExpectedBracket {
    std::string f, g;
    LaurentPoly value;
};

struct CaseSpec {
    std::string name;
    CaseKind kind = CaseKind::BelavinDrinfeld;
    int n = 2;
    BDTriple triple;
    /// Printed closed form of r0 - t0/2 (zero for the standard r-matrix).
    RTensor r0_offset;
    RTensor r0;
    /// The r-matrix driving the bracket.
    RTensor r;

    ContextPtr ctx;
    /// Extended cluster on SL_n: mutable variables first, then stable ones.
    std::vector<std::string> names;
    std::vector<LaurentPoly> basis;
    std::vector<std::size_t> stable;
    /// B~ on SL_n and B~ on GL_n with det X appended as the last stable variable.
    std::optional<ExtExchangeMatrix> btilde, btilde_gl;

    /// Scaled coefficient matrix as printed (scalar * Omega) and the corrections applied to it.
    std::optional<IntRows> omega_printed;
    long omega_scalar = 1;
    std::vector<MatrixErratum> omega_errata;
    /// Sign of D in B~ Omega = (D 0) that the data supports, and the sign stated in the text.
    int d_sign = 0;
    int stated_d_sign = 0;
    /// Basis elements negated in the seed so that every exchange relation holds with a plus sign.
    /// Signs do not affect the coefficient matrix or the weights.
    std::vector<std::size_t> sign_flips;
    /// Free-form notes on corrected basis polynomials.
    std::vector<std::string> notes;

    /// Integral basis of h_T used for the left and right torus actions.
    std::vector<QVector> torus_basis;
    std::vector<std::string> left_params, right_params;
    std::optional<WeightAssignment> weights;

    /// Extra named functions (y1, z2, ...) and the bracket values they must satisfy.
    std::map<std::string, LaurentPoly> named;
    std::vector<ExpectedBracket> expected_brackets;
    std::optional<DoubleWord> word;

    std::size_t mutable_count() const { return basis.size() - stable.size(); }
    std::size_t k_t() const { return torus_basis.size(); }
    LaurentPoly det() const;
    BracketSpec bracket_spec() const { return BracketSpec{n, r, std::nullopt}; }
    /// Printed matrix with the errata applied, divided by the scalar.
    std::optional<QMatrix> omega_expected() const;
    /// Seed on GL_n (basis with sign_flips applied, plus det X); needs btilde_gl.
    Seed gl_seed() const;
    /// Resolves P1.., det, or a named function. Throws UnknownVariable.
    LaurentPoly lookup(const std::string& name) const;
};

const std::vector<std::string>& case_names();
/// Throws InvalidInput for an unknown name.
CaseSpec load_case(const std::string& name);

enum class CheckStatus { Pass, Fail, Skip, ExpectedFailure };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    std::string witness;
    double seconds = 0;
};

struct VerificationReport {
    std::string case_name;
    std::vector<CheckResult> checks;

    bool ok() const;
    const CheckResult& check(const std::string& name) const;
    /// Human-readable, one line per stage with timings.
    std::string to_text() const;
};

/// {"case", "checks": [{"name", "status", "witness"}]}; no timings.
nlohmann::json to_json(const VerificationReport& r);

struct VerifyOptions {
    /// Skips regularity and the full coefficient-matrix extraction for SL4 cases.
    bool skip_slow = false;
    std::uint64_t seed = 20240607;
};

VerificationReport verify_case(const std::string& name, const VerifyOptions& options = {});
VerificationReport verify_case(const CaseSpec& spec, const VerifyOptions& options = {});

struct TwistSample {
    std::string label;
    Twist twist;
    bool log_canonical = false;
    /// B~ Omega_V still has the form (D 0) with the untwisted D.
    bool same_d = false;
    bool vanishes_at_identity = false;
    bool multiplicative = false;
    /// V12 = 0 and V2 = -V1.
    bool expected_poisson_lie = false;
    std::string witness;

    bool ok() const { return log_canonical && same_d && multiplicative == expected_poisson_lie; }
};

struct TwistFamilyReport {
    std::string case_name;
    std::vector<TwistSample> samples;
    bool ok() const;
    std::string to_text() const;
};

nlohmann::json to_json(const TwistFamilyReport& r);

/// Random skew V1, V2 and arbitrary V12 with small rational entries.
std::vector<Twist> random_twists(const CaseSpec& spec, std::size_t count, std::uint64_t seed);
/// Nine twists: V12 in {0, I, a non-symmetric matrix} times (V1, V2) in {(A, -A), (A, A), (0, A)}.
std::vector<std::pair<std::string, Twist>> twist_grid(const CaseSpec& spec);

TwistSample evaluate_twist(const CaseSpec& spec, const Twist& twist, const std::string& label);
TwistFamilyReport verify_twist_family(const std::string& name, std::size_t samples, std::uint64_t seed = 7);

}  // namespace clusterbd
