#include "clusterbd/rootdata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>


namespace clusterbd {

Root simple_root(int k) { return Root{k - 1, k}; }

std::vector<int> simple_support(const Root& r) {
    std::vector<int> s;
    for (int k = r.i + 1; k <= r.j; ++k) s.push_back(k);
    return s;
}

std::string to_string(const Root& r) {
    return "e" + std::to_string(r.i + 1) + "-e" + std::to_string(r.j + 1);
}

RootSystemA::RootSystemA(int n) : n_(n) {
    if (n < 2) throw InvalidInput("root system needs n >= 2");
    for (int h = 1; h < n; ++h)
        for (int i = 0; i + h < n; ++i) positive_.push_back({i, i + h});
}

std::vector<int> BDTriple::gamma1() const {
    std::vector<int> out;
    for (const auto& [a, b] : gamma) out.push_back(a);
    return out;
}

std::vector<int> BDTriple::gamma2() const {
    std::vector<int> out;
    for (const auto& [a, b] : gamma) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

TripleCheck validate_bd_triple(const BDTriple& t) {
    if (t.n < 2) return {false, "n must be at least 2"};
    std::set<int> image;
    for (const auto& [a, b] : t.gamma) {
        if (a < 1 || a >= t.n || b < 1 || b >= t.n)
            return {false, "simple root index out of range in gamma(" + std::to_string(a) + ")"};
        if (!image.insert(b).second) return {false, "gamma is not injective at alpha" + std::to_string(b)};
    }
    // For type A the Cartan matrix entry of two distinct simple roots is -1 iff they are adjacent.
    for (const auto& [a, ga] : t.gamma)
        for (const auto& [b, gb] : t.gamma)
            if (a < b && ((b - a == 1) != (std::abs(gb - ga) == 1)))
                return {false, "gamma is not an isometry on alpha" + std::to_string(a) + ", alpha" + std::to_string(b)};
    for (const auto& [a, ga] : t.gamma) {
        int cur = a;
        std::size_t steps = 0;
        while (t.gamma.count(cur)) {
            cur = t.gamma.at(cur);
            if (++steps > t.gamma.size())
                return {false, "gamma is not nilpotent: the orbit of alpha" + std::to_string(a) + " never leaves Gamma1"};
        }
    }
    return {};
}

std::vector<std::pair<Root, Root>> bd_partial_order(const BDTriple& t) {
    if (auto check = validate_bd_triple(t); !check) throw InvalidInput("invalid triple: " + check.reason);
    std::vector<std::pair<Root, Root>> out;
    auto in_gamma1 = [&](const Root& r) {
        for (int k : simple_support(r))
            if (!t.gamma.count(k)) return false;
        return true;
    };
    auto apply = [&](const Root& r) {
        int lo = t.n, hi = 0;
        for (int k : simple_support(r)) {
            lo = std::min(lo, t.gamma.at(k));
            hi = std::max(hi, t.gamma.at(k));
        }
        // Isometry maps a connected string of simple roots onto a connected string.
        return Root{lo - 1, hi};
    };
    const RootSystemA system(t.n);
    for (const Root& a : system.positive_roots()) {
        Root cur = a;
        while (in_gamma1(cur)) {
            cur = apply(cur);
            out.emplace_back(a, cur);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational root_value(const Root& r, const QVector& diagonal) { return diagonal.at(r.i) - diagonal.at(r.j); }

CartanSubspace h_T(const BDTriple& t) {
    const auto order = bd_partial_order(t);
    const std::size_t n = t.n;
    QMatrix constraints(order.size() + 1, n);
    for (std::size_t c = 0; c < order.size(); ++c) {
        const auto& [a, b] = order[c];
        constraints(c, a.i) += 1;
        constraints(c, a.j) -= 1;
        constraints(c, b.i) -= 1;
        constraints(c, b.j) += 1;
    }
    for (std::size_t k = 0; k < n; ++k) constraints(order.size(), k) = 1;
    CartanSubspace h{kernel_basis(constraints)};
    if (h.dim() != n - 1 - t.gamma.size()) throw std::logic_error("dim h_T differs from n-1-|Gamma1|");
    return h;
}

std::size_t k_T(const BDTriple& t) { return t.n - 1 - t.gamma.size(); }

BDTriple inverse_triple(const BDTriple& t) {
    BDTriple out{t.n, {}};
    for (const auto& [a, b] : t.gamma) out.gamma[b] = a;
    return out;
}

BDTriple flipped_triple(const BDTriple& t) {
    BDTriple out{t.n, {}};
    for (const auto& [a, b] : t.gamma) out.gamma[t.n - a] = t.n - b;
    return out;
}

nlohmann::json to_json(const BDTriple& t) {
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [a, b] : t.gamma) g[std::to_string(a)] = std::to_string(b);
    return {{"n", t.n}, {"gamma", g}};
}

BDTriple triple_from_json(const nlohmann::json& j) {
    try {
        BDTriple t{j.at("n").get<int>(), {}};
        if (j.contains("gamma")) {
            for (const auto& [k, v] : j.at("gamma").items()) {
                const int b = v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>();
                t.gamma[std::stoi(k)] = b;
            }
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("triple JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw InvalidInput(std::string("triple JSON: ") + e.what());
    }
}

}  // namespace clusterbd
