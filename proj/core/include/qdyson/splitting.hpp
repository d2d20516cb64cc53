#pragma once

#include <span>

#include "qdyson/ctengine.hpp"
#include "qdyson/factored.hpp"

namespace qdyson {

enum class PochIdentity { b1, b2, c };

/// One of the three single-variable Pochhammer identities in y, checked by
/// clearing the denominator Pochhammer:
///   b1 (0 <= t <= j):    (1/y)_i (qy)_j / (q^{-t}/y)_i = q^{it} (q^{1-i}y)_t (q^{t+1}y)_{j-t}
///   b2 (-1 <= t <= j-1): (y)_j (q/y)_i / (q^{-t}/y)_i = q^{i(t+1)} (q^{-i}y)_{t+1} (q^{t+1}y)_{j-t-1}
///   c  (0 <= t <= j-1):  (y)_j (q/y)_i / (q^{-t}/y)_{i+1} = -y q^{(i+1)t} (q^{-i}y)_t (q^{t+1}y)_{j-t-1}
/// Throws DomainError if t is out of range.
[[nodiscard]] bool verify_poch_lemma(int i, int j, int t, PochIdentity which);

/// Variables of the split pieces: x1..xn, w2..ws (w1 eliminated).
[[nodiscard]] Vars split_vars(int n, int s);

/// Residue coefficient of 1/(1 - q^j x_i/w_1) in F_{n,n0}, first block (i <= n0, 0 <= j <= a_i - 2).
[[nodiscard]] FactoredRational build_Aij(std::span<const int> a, int n0, int i, int j, int s);
/// Same for the second block (i > n0, 0 <= j <= a_i - 1).
[[nodiscard]] FactoredRational build_Bij(std::span<const int> a, int n0, int i, int j, int s);
/// A_ij or B_ij depending on the block of i.
[[nodiscard]] FactoredRational build_coefficient(std::span<const int> a, int n0, int i, int j, int s);

/// F (1 - q^j x_i/w_1) at w_1 = q^j x_i, over split_vars(n, s).
[[nodiscard]] FactoredRational residue_of_F(std::span<const int> a, int n0, int i, int j, int s);

/// build_Aij / build_Bij agree with the residue of F.
[[nodiscard]] bool residue_check(std::span<const int> a, int n0, int i, int j, int s);

/// Lowest x_i-degree of the numerator of the coefficient: at least n - n0 for
/// A_ij, at least 0 for B_ij.
[[nodiscard]] bool degree_claim_holds(std::span<const int> a, int n0, int i, int j, int s);

struct SplitBounds {
    int max_n = 3;
    int max_a = 3;
    int max_s = 2;
};

/// F_{n,n0} equals the sum of its coefficients over (1 - q^j x_i/w_1),
/// compared over the common denominator.  Throws DomainError when the instance
/// exceeds `bounds`, DegenerateParameters when F has no pole in w_1.
[[nodiscard]] bool verify_split(std::span<const int> a, int n0, int s, const SplitBounds& bounds = {});

/// D_{v,lambda} from one application of the inductive formula, with sub-values
/// by brute force.  Requires lambda nonempty, lambda_1 = r and n >= 2.
[[nodiscard]] ScalarQ inductive_d(const DysonInstance& inst);
[[nodiscard]] ScalarQ inductive_d(const DysonInstance& inst, OracleCache& cache);

}  // namespace qdyson
