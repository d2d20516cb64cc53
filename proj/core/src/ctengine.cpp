#include "qdyson/ctengine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qdyson/errors.hpp"

namespace qdyson {

namespace {

std::string join(std::span<const int> xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

void DysonInstance::validate() const {
    for (int ai : a) {
        if (ai < 1) throw DomainError("instance: a must be a sequence of positive integers");
    }
    if (n0 < 0 || n0 > n()) throw DomainError("instance: n0 must lie in 0..n");
    if (static_cast<int>(v.size()) != n()) throw DomainError("instance: v must have length n");
}

std::string DysonInstance::key() const {
    return "a=" + join(a) + " n0=" + std::to_string(n0) + " v=" + join(v) + " lambda=" + lambda.to_string();
}

std::string instance_to_json(const DysonInstance& inst) {
    nlohmann::ordered_json j;
    j["a"] = inst.a;
    j["n0"] = inst.n0;
    j["v"] = inst.v;
    j["lambda"] = inst.lambda.parts();
    return j.dump();
}

DysonInstance instance_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        DysonInstance inst;
        inst.a = j.at("a").get<std::vector<int>>();
        inst.n0 = j.value("n0", 0);
        inst.v = j.contains("v") ? j.at("v").get<std::vector<int>>() : std::vector<int>(inst.a.size(), 0);
        inst.lambda = Partition(j.value("lambda", std::vector<int>{}));
        inst.validate();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("instance JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- kernel

LaurentPoly dyson_product(std::span<const int> a, int n0, const Vars& vars) {
    const int n = static_cast<int>(a.size());
    if (vars->size() < n) throw DomainError("dyson_product: variable set too small");
    LaurentPoly result = LaurentPoly::constant(vars, ScalarQ(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int drop = i <= n0 ? 1 : 0;
            Monomial ratio(vars->size());
            ratio[i - 1] = 1;
            ratio[j - 1] = -1;
            result *= poch_monomial(vars, ratio, a[static_cast<size_t>(i - 1)] - drop, 0);
            result *= poch_monomial(vars, ratio.inverse(), a[static_cast<size_t>(j - 1)] - drop, 1);
        }
    }
    return result;
}

LaurentPoly dyson_product(std::span<const int> a, int n0) {
    return dyson_product(a, n0, dyson_vars(static_cast<int>(a.size())));
}

// ---------------------------------------------------------------- oracle

DysonOracle::DysonOracle(std::vector<int> a, int n0)
    : a_(std::move(a)),
      n0_(n0),
      vars_(dyson_vars(static_cast<int>(a_.size()))),
      kernel_(vars_),
      alphabet_(build_alphabet(a_, n0_)) {
    DysonInstance{a_, n0_, std::vector<int>(a_.size(), 0), {}}.validate();
    kernel_ = dyson_product(a_, n0_, vars_);
    h_single_.push_back(LaurentPoly::constant(vars_, ScalarQ(1)));
    e_single_.push_back(LaurentPoly::constant(vars_, ScalarQ(1)));
}

const LaurentPoly& DysonOracle::h_single(int r) {
    if (r >= static_cast<int>(h_single_.size())) h_single_ = complete_h_upto(r, alphabet_, vars_);
    return h_single_[static_cast<size_t>(r)];
}

const LaurentPoly& DysonOracle::h(const Partition& lambda) {
    if (auto it = h_cache_.find(lambda); it != h_cache_.end()) return it->second;
    LaurentPoly value(vars_);
    if (lambda.empty()) {
        value = LaurentPoly::constant(vars_, ScalarQ(1));
    } else {
        // Extend the cached prefix by the last part.
        std::vector<int> prefix = lambda.parts();
        const int last = prefix.back();
        prefix.pop_back();
        const LaurentPoly& head = h(Partition(prefix));
        value = head * h_single(last);
    }
    return h_cache_.emplace(lambda, std::move(value)).first->second;
}

const LaurentPoly& DysonOracle::e_single(int r) {
    if (r >= static_cast<int>(e_single_.size())) e_single_ = elementary_e_upto(r, alphabet_, vars_);
    return e_single_[static_cast<size_t>(r)];
}

const LaurentPoly& DysonOracle::e(const Partition& mu) {
    if (auto it = e_cache_.find(mu); it != e_cache_.end()) return it->second;
    LaurentPoly value(vars_);
    if (mu.empty()) {
        value = LaurentPoly::constant(vars_, ScalarQ(1));
    } else {
        std::vector<int> prefix = mu.parts();
        const int last = prefix.back();
        prefix.pop_back();
        const LaurentPoly& head = e(Partition(prefix));
        value = head * e_single(last);
    }
    return e_cache_.emplace(mu, std::move(value)).first->second;
}

const LaurentPoly& DysonOracle::schur(const Partition& lambda) {
    if (auto it = schur_cache_.find(lambda); it != schur_cache_.end()) return it->second;
    const bool dual = lambda.part(1) < lambda.length();
    const Partition shape = dual ? lambda.conjugate() : lambda;
    const int size = std::max(shape.length(), 1);
    std::vector<int> perm(static_cast<size_t>(size));
    std::iota(perm.begin(), perm.end(), 1);
    LaurentPoly value(vars_);
    do {
        std::vector<int> idx;
        bool vanishes = false;
        for (int i = 1; i <= size; ++i) {
            const int k = shape.part(i) - i + perm[static_cast<size_t>(i - 1)];
            if (k < 0) {
                vanishes = true;
                break;
            }
            if (k > 0) idx.push_back(k);
        }
        if (vanishes) continue;
        int inversions = 0;
        for (int i = 0; i < size; ++i) {
            for (int j = i + 1; j < size; ++j) inversions += perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)];
        }
        const Partition mu = Partition::sorted_from(idx);
        const LaurentPoly& term = dual ? e(mu) : h(mu);
        if (inversions % 2 == 0) {
            value += term;
        } else {
            value -= term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return schur_cache_.emplace(lambda, std::move(value)).first->second;
}

ScalarQ DysonOracle::extract(std::span<const int> v, const LaurentPoly& sym) const {
    // [x^v] sym * kernel = sum over m in supp(sym) of sym[m] * kernel[x^v / m].
    const Monomial target = Monomial::from(v);
    ScalarQ acc;
    for (const auto& t : sym.terms()) {
        if (const ScalarQ* c = kernel_.find(target / t.mono)) acc.add_product(t.coef, *c);
    }
    return acc;
}

ScalarQ DysonOracle::d(std::span<const int> v, const Partition& lambda) {
    if (static_cast<int>(v.size()) != static_cast<int>(a_.size())) throw DomainError("d: v must have length n");
    if (std::accumulate(v.begin(), v.end(), 0) != lambda.size()) return {};
    return extract(v, h(lambda));
}

ScalarQ DysonOracle::d_schur(std::span<const int> v, const Partition& lambda) {
    if (static_cast<int>(v.size()) != static_cast<int>(a_.size())) throw DomainError("d_schur: v must have length n");
    if (std::accumulate(v.begin(), v.end(), 0) != lambda.size()) return {};
    return extract(v, schur(lambda));
}

DysonOracle& OracleCache::get(std::span<const int> a, int n0) {
    auto key = std::make_pair(std::vector<int>(a.begin(), a.end()), n0);
    if (auto it = oracles_.find(key); it != oracles_.end()) return it->second;
    return oracles_.emplace(key, DysonOracle(key.first, n0)).first->second;
}

ScalarQ d_brute(const DysonInstance& inst) {
    inst.validate();
    DysonOracle oracle(inst.a, inst.n0);
    return oracle.d(inst.v, inst.lambda);
}

ScalarQ d_brute_schur(const DysonInstance& inst) {
    inst.validate();
    DysonOracle oracle(inst.a, inst.n0);
    return oracle.d_schur(inst.v, inst.lambda);
}

ScalarQ two_part_ct(std::span<const int> a, int n0) {
    DysonInstance{std::vector<int>(a.begin(), a.end()), n0, std::vector<int>(a.size(), 0), {}}.validate();
    return dyson_product(a, n0).constant_term();
}

// ---------------------------------------------------------------- F_{n,n0}

FactoredRational build_F(std::span<const int> a, int n0, const Vars& vars, std::span<const int> x_index,
                         std::span<const int> w_index) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(x_index.size()) != n) throw DomainError("build_F: x index map size");
    // Kernel over a private x-only context, then embedded.
    const Vars xs = dyson_vars(n);
    LaurentPoly kernel = dyson_product(a, n0, xs).embedded(vars, x_index);
    std::vector<LinearFactor> dens;
    for (int i = 1; i <= n; ++i) {
        const int len = truncated_exponent(a, n0, i);
        for (int wj : w_index) {
            Monomial m(vars->size());
            m[x_index[static_cast<size_t>(i - 1)]] = 1;
            m[wj] = -1;
            for (int t = 0; t < len; ++t) dens.push_back({t, m});
        }
    }
    return FactoredRational(ScalarQ(1), std::move(kernel), std::move(dens));
}

FactoredRational build_F(std::span<const int> a, int n0, int s) {
    if (s < 1) throw DomainError("build_F: s must be at least 1");
    const int n = static_cast<int>(a.size());
    DysonInstance{std::vector<int>(a.begin(), a.end()), n0, std::vector<int>(a.size(), 0), {}}.validate();
    std::vector<int> x_index(static_cast<size_t>(n));
    std::iota(x_index.begin(), x_index.end(), 0);
    std::vector<int> w_index(static_cast<size_t>(s));
    std::iota(w_index.begin(), w_index.end(), n);
    return build_F(a, n0, dyson_vars(n, s), x_index, w_index);
}

ScalarQ d_via_generating_function(const DysonInstance& inst, int s) {
    inst.validate();
    const int n = inst.n();
    s = std::max({s, inst.lambda.length(), 1});
    if (std::accumulate(inst.v.begin(), inst.v.end(), 0) != inst.lambda.size()) return {};
    const FactoredRational f = build_F(inst.a, inst.n0, s);
    const Vars& vars = f.vars();

    LaurentPoly g = f.numerator();
    for (const auto& factor : f.denominators()) {
        int wj = -1;
        for (int k = n; k < n + s; ++k) {
            if (factor.mono[k] != 0) wj = k;
        }
        const int depth = inst.lambda.part(wj - n + 1);
        // 1 / (1 - c) truncated at c^depth, c = q^e x_i / w_j.
        LaurentPoly series = LaurentPoly::constant(vars, ScalarQ(1));
        LaurentPoly power = series;
        const LaurentPoly c = LaurentPoly::term(vars, factor.mono, ScalarQ::q_power(factor.q_exp));
        for (int k = 1; k <= depth; ++k) {
            power *= c;
            series += power;
        }
        g *= series;
        // w-exponents only decrease from here on: drop what cannot reach w^{-lambda}.
        std::vector<LaurentPoly::Term> kept;
        for (const auto& t : g.terms()) {
            bool reachable = true;
            for (int k = n; k < n + s; ++k) reachable = reachable && t.mono[k] >= -inst.lambda.part(k - n + 1);
            if (reachable) kept.push_back(t);
        }
        g = LaurentPoly::from_terms(vars, std::move(kept));
    }
    Monomial target(vars->size());
    for (int i = 0; i < n; ++i) target[i] = inst.v[static_cast<size_t>(i)];
    for (int j = 1; j <= s; ++j) target[n + j - 1] = -inst.lambda.part(j);
    return g.coefficient(target);
}

}  // namespace qdyson
