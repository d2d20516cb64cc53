#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdyson/factored.hpp"
#include "qdyson/laurent.hpp"
#include "qdyson/symfun.hpp"

namespace qdyson {

/// Parameters (a, n0, v, lambda) of the constant term D_{v,lambda}(a; n, n0), n = |a|.
struct DysonInstance {
    std::vector<int> a;
    int n0 = 0;
    std::vector<int> v;
    Partition lambda;

    [[nodiscard]] int n() const noexcept { return static_cast<int>(a.size()); }
    /// Throws DomainError unless a_i >= 1, 0 <= n0 <= n and len(v) = n.
    /// The empty instance (n = 0) is allowed; its constant term is 1.
    void validate() const;
    /// Stable sort key and human-readable label, e.g. "a=1,2 n0=1 v=1,0 lambda=(1)".
    [[nodiscard]] std::string key() const;

    friend bool operator==(const DysonInstance&, const DysonInstance&) = default;
};

/// {"a":[...], "n0":k, "v":[...], "lambda":[...]}
[[nodiscard]] std::string instance_to_json(const DysonInstance& inst);
[[nodiscard]] DysonInstance instance_from_json(std::string_view text);

/// a_i - chi(i <= n0) for the smaller index i of a pair, as used by every
/// factor of the two-part kernel (1-based i).
[[nodiscard]] inline int truncated_exponent(std::span<const int> a, int n0, int i) {
    return a[static_cast<size_t>(i - 1)] - (i <= n0 ? 1 : 0);
}

/// prod_{i<j} (x_i/x_j)_{a_i - chi(i<=n0)} (q x_j/x_i)_{a_j - chi(i<=n0)} over
/// `vars`, whose first n variables are x_1..x_n.
[[nodiscard]] LaurentPoly dyson_product(std::span<const int> a, int n0, const Vars& vars);
[[nodiscard]] LaurentPoly dyson_product(std::span<const int> a, int n0);

/// Brute-force coefficient extraction for a fixed (a, n0).
///
/// Holds the kernel product and caches h_lambda and s_lambda on the alphabet
/// X^{(a;n0)}, so grids over (v, lambda) reuse them.  Not thread-safe: use one
/// oracle per worker.
class DysonOracle {
public:
    DysonOracle(std::vector<int> a, int n0);

    [[nodiscard]] const std::vector<int>& a() const noexcept { return a_; }
    [[nodiscard]] int n0() const noexcept { return n0_; }
    [[nodiscard]] const Vars& vars() const noexcept { return vars_; }
    [[nodiscard]] const LaurentPoly& kernel() const noexcept { return kernel_; }

    /// D_{v,lambda}(a; n, n0): coefficient of x^v in h_lambda * kernel.
    [[nodiscard]] ScalarQ d(std::span<const int> v, const Partition& lambda);
    /// Same with s_lambda in place of h_lambda.
    [[nodiscard]] ScalarQ d_schur(std::span<const int> v, const Partition& lambda);
    [[nodiscard]] ScalarQ two_part_ct() const { return kernel_.constant_term(); }

    [[nodiscard]] const LaurentPoly& h(const Partition& lambda);
    /// s_lambda from the Leibniz expansion of the Jacobi-Trudi determinant over
    /// cached h_mu, or of its dual in e_mu when lambda has more rows than columns.
    [[nodiscard]] const LaurentPoly& schur(const Partition& lambda);

private:
    [[nodiscard]] ScalarQ extract(std::span<const int> v, const LaurentPoly& sym) const;
    const LaurentPoly& h_single(int r);
    const LaurentPoly& e_single(int r);
    const LaurentPoly& e(const Partition& mu);

    std::vector<int> a_;
    int n0_;
    Vars vars_;
    LaurentPoly kernel_;
    Alphabet alphabet_;
    std::vector<LaurentPoly> h_single_;
    std::vector<LaurentPoly> e_single_;
    std::map<Partition, LaurentPoly> h_cache_;
    std::map<Partition, LaurentPoly> e_cache_;
    std::map<Partition, LaurentPoly> schur_cache_;
};

/// Oracles keyed by (a, n0), built on first use.  Not thread-safe.
class OracleCache {
public:
    DysonOracle& get(std::span<const int> a, int n0);
    [[nodiscard]] size_t size() const noexcept { return oracles_.size(); }
    void clear() { oracles_.clear(); }

private:
    std::map<std::pair<std::vector<int>, int>, DysonOracle> oracles_;
};

[[nodiscard]] ScalarQ d_brute(const DysonInstance& inst);
[[nodiscard]] ScalarQ d_brute_schur(const DysonInstance& inst);
[[nodiscard]] ScalarQ two_part_ct(std::span<const int> a, int n0);

/// F_{n,n0}(a; x, w) over x1..xn, w1..ws: numerator the kernel, denominators
/// (1 - q^t x_i/w_j) for t < a_i - chi(i <= n0), j = 1..s.
[[nodiscard]] FactoredRational build_F(std::span<const int> a, int n0, int s);
/// Same, over a caller-supplied variable set whose x's and w's are given by index maps.
[[nodiscard]] FactoredRational build_F(std::span<const int> a, int n0, const Vars& vars,
                                       std::span<const int> x_index, std::span<const int> w_index);

/// CT_{x,w} x^{-v} w^lambda F_{n,n0}(a; x, w) with s w-variables, computed by
/// expanding every denominator as a geometric series truncated at the only
/// w-degree that can reach w^{-lambda}.  Independent of h_lambda.
[[nodiscard]] ScalarQ d_via_generating_function(const DysonInstance& inst, int s = 0);

}  // namespace qdyson
