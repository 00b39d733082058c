// Command-line front end for the clusterbd library.
//
//   clusterbd verify <case|all> [--json] [--skip-slow]
//   clusterbd bracket --case <c> --f <name|poly-json> --g <name|poly-json> [--json]
//   clusterbd mutate --seed <file> -k <i>
//   clusterbd cybe --triple <file> [--r0 <file>] [--json]
//   clusterbd minors --n <n> --word <file>
//   clusterbd twist --case <c> (--v1 <file> --v2 <file> --v12 <file> | --samples <count>) [--json]
//   clusterbd report <case> [--seed]
//
// Exit status: 0 when every outcome is as expected, 1 on a verification mismatch, 2 on usage errors.

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "clusterbd/cases.hpp"

using namespace clusterbd;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

LaurentPoly resolve_poly(const CaseSpec& spec, const std::string& arg) {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) {
        try {
            return laurent_from_json(spec.ctx, nlohmann::json::parse(arg));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("polynomial JSON: ") + e.what());
        }
    }
    return spec.lookup(arg);
}

int cmd_verify(const std::string& target, bool json, bool skip_slow) {
    std::vector<std::string> names;
    if (target == "all") {
        names = case_names();
    } else {
        names.push_back(target);
    }
    VerifyOptions options;
    options.skip_slow = skip_slow;
    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& name : names) {
        const VerificationReport r = verify_case(load_case(name), options);
        ok = ok && r.ok();
        if (json) {
            all.push_back(to_json(r));
        } else {
            std::cout << r.to_text();
        }
    }
    if (json) std::cout << (names.size() == 1 ? all.front() : all).dump(2) << "\n";
    return ok ? kOk : kMismatch;
}

int cmd_bracket(const std::string& case_name, const std::string& f, const std::string& g, bool json) {
    const CaseSpec spec = load_case(case_name);
    const LaurentPoly value = sklyanin_bracket(spec.bracket_spec(), resolve_poly(spec, f), resolve_poly(spec, g));
    if (json) {
        std::cout << to_json(value).dump(2) << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return kOk;
}

int cmd_mutate(const std::string& path, std::size_t k) {
    const Seed seed = seed_from_json(read_json(path));
    if (k < 1 || k > seed.matrix.n()) throw UsageError("-k must be a mutable index in 1.." + std::to_string(seed.matrix.n()));
    std::cout << to_json(mutate_seed(seed, k - 1)).dump(2) << "\n";
    return kOk;
}

int cmd_cybe(const std::string& triple_path, const std::string& r0_path, bool json) {
    const BDTriple triple = triple_from_json(read_json(triple_path));
    const auto check = validate_bd_triple(triple);
    if (!check) throw UsageError("invalid triple: " + check.reason);
    const R0Solution sol = solve_r0(triple);
    const RTensor r0 = r0_path.empty() ? sol.particular : rtensor_from_json(read_json(r0_path));
    const std::string violation = r0_violation(triple, r0);
    if (!violation.empty()) {
        std::cout << "r0 rejected: " << violation << "\n";
        return kMismatch;
    }
    const RTensor r = assemble_r(triple, r0);
    const CybeReport rep = check_cybe_unitarity(r);
    const AdReport ad = check_ad_invariance(r, h_T(triple));
    const bool ok = rep.ok() && ad.ok();
    if (json) {
        nlohmann::json out{{"r", to_json(r)},
                           {"cybe", rep.cybe},
                           {"unitarity", rep.unitarity},
                           {"ad_invariant", ad.ok()},
                           {"r0_freedom", sol.freedom.size()},
                           {"k_T", k_T(triple)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "r = " << r.to_string() << "\n"
                  << "CYBE: " << (rep.cybe ? "holds" : "fails") << "\n"
                  << "r + r21 = t: " << (rep.unitarity ? "yes" : "no") << "\n"
                  << "Ad(h_T)-invariant: " << (ad.ok() ? "yes" : "no") << "\n"
                  << "k_T = " << k_T(triple) << ", r0 solution space dimension " << sol.freedom.size() << "\n";
    }
    return ok ? kOk : kMismatch;
}

int cmd_minors(int n, const std::string& path) {
    const DoubleWord w = double_word_from_json(read_json(path));
    if (w.n != n) throw UsageError("--n " + std::to_string(n) + " does not match the word's n = " + std::to_string(w.n));
    const InitialCluster c = initial_cluster(w);
    nlohmann::json vars = nlohmann::json::array();
    for (std::size_t i = 0; i < c.variables.size(); ++i) {
        const bool stable = std::find(c.stable.begin(), c.stable.end(), i) != c.stable.end();
        std::vector<std::string> left, right;
        for (const auto& q : c.left_weights[i]) left.push_back(to_string(q));
        for (const auto& q : c.right_weights[i]) right.push_back(to_string(q));
        vars.push_back({{"position", c.positions[i]},
                        {"stable", stable},
                        {"minor", c.variables[i].to_string()},
                        {"poly", to_json(c.variables[i])},
                        {"left_weight", left},
                        {"right_weight", right}});
    }
    std::cout << nlohmann::json{{"n", n}, {"variables", vars}}.dump(2) << "\n";
    return kOk;
}

int cmd_twist(const std::string& case_name, const std::string& v1, const std::string& v2, const std::string& v12,
              std::size_t samples, bool json) {
    if (v1.empty() && v2.empty() && v12.empty()) {
        const TwistFamilyReport rep = verify_twist_family(case_name, samples);
        std::cout << (json ? to_json(rep).dump(2) + "\n" : rep.to_text());
        return rep.ok() ? kOk : kMismatch;
    }
    if (v1.empty() || v2.empty() || v12.empty()) throw UsageError("--v1, --v2 and --v12 go together");
    const CaseSpec spec = load_case(case_name);
    const Twist twist{spec.torus_basis, qmatrix_from_json(read_json(v1)), qmatrix_from_json(read_json(v2)),
                      qmatrix_from_json(read_json(v12))};
    twist.block();  // shape and skew-symmetry check
    TwistFamilyReport rep{case_name, {evaluate_twist(spec, twist, "user")}};
    std::cout << (json ? to_json(rep).dump(2) + "\n" : rep.to_text());
    return rep.ok() ? kOk : kMismatch;
}

nlohmann::json case_json(const CaseSpec& c) {
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < c.basis.size(); ++i)
        basis.push_back({{"name", c.names[i]}, {"poly", c.basis[i].to_string()}});
    nlohmann::json j{{"case", c.name}, {"n", c.n}, {"basis", basis}, {"stable", c.stable}};
    if (c.kind != CaseKind::Triangular) j["triple"] = to_json(c.triple);
    j["r"] = to_json(c.r);
    if (c.btilde) j["Btilde"] = c.btilde->rows();
    if (c.btilde_gl) j["Btilde_gl"] = c.btilde_gl->rows();
    if (c.omega_printed) {
        j["omega_printed"] = *c.omega_printed;
        j["omega_scalar"] = c.omega_scalar;
        nlohmann::json errata = nlohmann::json::array();
        for (const auto& e : c.omega_errata)
            errata.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"printed", e.printed}, {"corrected", e.corrected}});
        j["omega_errata"] = errata;
    }
    if (c.d_sign) j["d_sign"] = c.d_sign;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

int cmd_report(const std::string& case_name, bool seed) {
    const CaseSpec spec = load_case(case_name);
    if (seed) {
        std::cout << to_json(spec.gl_seed()).dump(2) << "\n";
    } else {
        std::cout << case_json(spec).dump(2) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cluster-structure and Poisson bracket computations on SL_n and GL_n"};
    app.require_subcommand(1);

    std::string target, case_name, f, g, seed_path, triple_path, r0_path, word_path, v1, v2, v12;
    bool json = false, skip_slow = false, as_seed = false;
    std::size_t k = 0, samples = 5;
    int n = 0;

    auto* verify = app.add_subcommand("verify", "Run the verification pipeline for a catalog case");
    verify->add_option("case", target, "Case name or 'all'")->required();
    verify->add_flag("--json", json);
    verify->add_flag("--skip-slow", skip_slow, "Skip SL4 regularity and coefficient-matrix extraction");

    auto* bracket = app.add_subcommand("bracket", "Sklyanin bracket of two functions");
    bracket->add_option("--case", case_name)->required();
    bracket->add_option("--f", f, "Catalog name (P3, y1, det, ...) or polynomial JSON")->required();
    bracket->add_option("--g", g)->required();
    bracket->add_flag("--json", json);

    auto* mutate = app.add_subcommand("mutate", "Mutate a seed file in one direction");
    mutate->add_option("--seed", seed_path)->required()->check(CLI::ExistingFile);
    mutate->add_option("-k", k, "Mutable direction, 1-based")->required();

    auto* cybe = app.add_subcommand("cybe", "Assemble r from a triple and check CYBE and unitarity");
    cybe->add_option("--triple", triple_path)->required()->check(CLI::ExistingFile);
    cybe->add_option("--r0", r0_path)->check(CLI::ExistingFile);
    cybe->add_flag("--json", json);

    auto* minors = app.add_subcommand("minors", "Initial cluster of generalized minors for a double word");
    minors->add_option("--n", n)->required();
    minors->add_option("--word", word_path)->required()->check(CLI::ExistingFile);

    auto* twist = app.add_subcommand("twist", "Twisted bracket on a catalog case");
    twist->add_option("--case", case_name)->required();
    twist->add_option("--v1", v1)->check(CLI::ExistingFile);
    twist->add_option("--v2", v2)->check(CLI::ExistingFile);
    twist->add_option("--v12", v12)->check(CLI::ExistingFile);
    twist->add_option("--samples", samples, "Random twists when no matrices are given");
    twist->add_flag("--json", json);

    auto* report = app.add_subcommand("report", "Dump the catalog data of a case as JSON");
    report->add_option("case", case_name)->required();
    report->add_flag("--seed", as_seed, "Print the GL_n seed instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify) return cmd_verify(target, json, skip_slow);
        if (*bracket) return cmd_bracket(case_name, f, g, json);
        if (*mutate) return cmd_mutate(seed_path, k);
        if (*cybe) return cmd_cybe(triple_path, r0_path, json);
        if (*minors) return cmd_minors(n, word_path);
        if (*twist) return cmd_twist(case_name, v1, v2, v12, samples, json);
        if (*report) return cmd_report(case_name, as_seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const clusterbd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
