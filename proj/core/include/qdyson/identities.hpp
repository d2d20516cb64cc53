#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdyson/qpoly.hpp"
#include "qdyson/symfun.hpp"

namespace qdyson {

/// Index subset of {1..m}, 1-based and increasing.
using Subset = std::vector<int>;

/// All k-element subsets of {1..m} in lexicographic order.
[[nodiscard]] std::vector<Subset> subsets_of_size(int m, int k);
/// All nonempty subsets of `set`, ordered by bitmask.
[[nodiscard]] std::vector<Subset> nonempty_subsets(const Subset& set);

/// (q)_{|a|} / prod (q)_{a_i}.
[[nodiscard]] QPoly qdyson_rhs(std::span<const int> a);

/// Closed form of D_{v,(r)}(a; n, 0) at v = r * e_k.
[[nodiscard]] ScalarQ kadell_rhs(std::span<const int> a, int k, int r);

struct VanishingWitness {
    struct Entry {
        Subset subset;
        int p = 0;         // #{i in I : i <= n0}
        int v_sum = 0;     // sum_{i in I} v_i
        int lambda_sum = 0;  // lambda_1 + ... + lambda_j
    };
    int j = 0;
    std::vector<Entry> per_subset;
};

/// Smallest j in 1..n-1 such that every j-subset I satisfies
/// sum_{i in I} v_i - p_I (n - n0 - j + p_I) < lambda_1 + ... + lambda_j.
/// Throws PreconditionError unless |v| = |lambda|.
[[nodiscard]] std::optional<VanishingWitness> vanishing_predicate(std::span<const int> v, const Partition& lambda,
                                                                  int n0);

/// Dominance order by prefix sums, padding with zeros.
[[nodiscard]] bool dominance_leq(const Partition& mu, const Partition& nu);
/// lambda <= v+ where v+ is v sorted decreasingly; v may have negative entries.
[[nodiscard]] bool dominated_by_sorted(const Partition& lambda, std::span<const int> v);

/// L_{m,I,J}(a) = sum of a_j over pairs i <= j <= m with i in I, j not in J.
/// A nonzero `skip` drops the index j = skip, which reads the weight on a^{(skip)}
/// with the original labels.
[[nodiscard]] int l_weight(int m, const Subset& I, const Subset& J, std::span<const int> a, int skip = 0);

/// sum_{k=0}^t q^{k(n-t)} / ((q^{-k})_k (q)_{t-k}) == qbinom(n, t).
[[nodiscard]] bool check_e_sum(int n, int t);

/// Checks the subset transformation
///   sum_{i in I} sum_{J subset I-{i}, J nonempty} (-1)^{|J|+1}
///       q^{a_{i+1}+...+a_m + L_{m,I-{i},J}(a^{(i)})} (1-q^{a_i})(1-q^{a_J})
///       / ((1-q^{|a|-a_i+r})(1-q^{|a|-a_i-a_J+r}))
///   = sum_{J subset I, J nonempty} (-1)^{|J|} q^{L_{m,I,J}(a)} (1-q^{a_J}) / (1-q^{|a|-a_J+r}).
/// Throws DegenerateParameters if a denominator exponent is zero.
[[nodiscard]] bool check_transsum(int m, const Subset& I, std::span<const int> a, int r);

}  // namespace qdyson
