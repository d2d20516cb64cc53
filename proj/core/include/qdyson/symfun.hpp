#pragma once

#include <span>
#include <string>
#include <vector>

#include "qdyson/laurent.hpp"

namespace qdyson {

/// One letter q^q_power * x_{x_index} of a finite alphabet (x_index is 1-based).
struct Letter {
    int x_index = 1;
    int q_power = 0;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Ordered list of letters, as produced by build_alphabet.
struct Alphabet {
    std::vector<Letter> letters;

    [[nodiscard]] size_t size() const noexcept { return letters.size(); }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws DomainError if not a partition.
    explicit Partition(std::vector<int> parts);
    /// Sorts a composition decreasingly and drops zeros (v -> v+);
    /// throws DomainError on negative entries.
    static Partition sorted_from(std::span<const int> entries);

    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const noexcept;  // |lambda|
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// lambda_i (1-based), zero beyond the length.
    [[nodiscard]] int part(int i) const noexcept;
    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    /// Remove the first k parts.
    [[nodiscard]] Partition drop_front(int k) const;
    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of `total` with parts at most `max_part` (max_part <= 0: unbounded),
/// in reverse lexicographic order.
[[nodiscard]] std::vector<Partition> partitions_of(int total, int max_part = 0);

/// The alphabet X^{(a;n0)}: for i <= n0 the letters x_i q^0..x_i q^{a_i-2};
/// for i > n0 the letters x_i q^0..x_i q^{a_i-1}.
[[nodiscard]] Alphabet build_alphabet(std::span<const int> a, int n0);

/// h_0..h_max_r of the alphabet, over `vars` (x_i is vars index i-1).
[[nodiscard]] std::vector<LaurentPoly> complete_h_upto(int max_r, const Alphabet& alphabet, const Vars& vars);
/// e_0..e_max_r of the alphabet.
[[nodiscard]] std::vector<LaurentPoly> elementary_e_upto(int max_r, const Alphabet& alphabet, const Vars& vars);
[[nodiscard]] LaurentPoly complete_h(int r, const Alphabet& alphabet, const Vars& vars);
[[nodiscard]] LaurentPoly h_lambda(const Partition& lambda, const Alphabet& alphabet, const Vars& vars);

/// det(h_{lambda_i - i + j}) of size max(l(lambda), 1), or `size` if larger.
[[nodiscard]] LaurentPoly schur_jt(const Partition& lambda, const Alphabet& alphabet, const Vars& vars,
                                   int size = 0);

/// Alphabet letters as single-term polynomials q^e * x_i over `vars`.
[[nodiscard]] std::vector<LaurentPoly::Term> alphabet_terms(const Alphabet& alphabet, const Vars& vars);

/// det(z_i^{lambda_j + N - j}) / prod_{i<j} (z_i - z_j) for N letters z, with the
/// division carried out exactly, one Vandermonde factor at a time.  Letters must
/// be pairwise distinct single terms and N >= l(lambda).
[[nodiscard]] LaurentPoly schur_bialternant(const Partition& lambda, std::span<const LaurentPoly::Term> letters,
                                            const Vars& vars);

/// Exact quotient p / (z - y) for single terms z != y; throws DomainError on a remainder.
[[nodiscard]] LaurentPoly divide_by_difference(const LaurentPoly& p, const LaurentPoly::Term& z,
                                               const LaurentPoly::Term& y);

}  // namespace qdyson
