#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qdyson/laurent.hpp"

namespace qdyson {

/// The factor 1 - q^q_exp * mono.
struct LinearFactor {
    int q_exp = 0;
    Monomial mono;

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
    friend std::strong_ordering operator<=>(const LinearFactor& a, const LinearFactor& b) noexcept {
        if (auto c = a.q_exp <=> b.q_exp; c != 0) return c;
        return a.mono <=> b.mono;
    }
};

[[nodiscard]] LaurentPoly expand(const Vars& vars, const LinearFactor& f);

/// scalar * numerator / prod(1 - q^e m) with the denominator kept as a sorted
/// multiset of linear factors.  Values are compared by clearing denominators,
/// never by series expansion.
class FactoredRational {
public:
    explicit FactoredRational(Vars vars);
    FactoredRational(ScalarQ scalar, LaurentPoly numerator, std::vector<LinearFactor> denominators);

    [[nodiscard]] const Vars& vars() const noexcept { return numerator_.vars(); }
    [[nodiscard]] const ScalarQ& scalar() const noexcept { return scalar_; }
    [[nodiscard]] const LaurentPoly& numerator() const noexcept { return numerator_; }
    [[nodiscard]] const std::vector<LinearFactor>& denominators() const noexcept { return denominators_; }

    /// Removes one copy of `f`; throws DomainError if it is not present.
    void remove_denominator(const LinearFactor& f);
    FactoredRational& operator*=(const FactoredRational& rhs);
    FactoredRational& operator*=(const LaurentPoly& rhs);
    FactoredRational& operator*=(const ScalarQ& rhs);

    /// Substitute vars[var] -> q^q_exp * target in numerator and denominators.
    /// Throws DivisionByZero if a denominator factor becomes 0.
    [[nodiscard]] FactoredRational substituted(int var, int q_exp, const Monomial& target) const;
    /// Re-express over a larger variable set.
    [[nodiscard]] FactoredRational embedded(const Vars& target, std::span<const int> index_map) const;

    [[nodiscard]] std::string to_string() const;

private:
    ScalarQ scalar_;
    LaurentPoly numerator_;
    std::vector<LinearFactor> denominators_;
};

/// Multiset union with maximum multiplicity.
[[nodiscard]] std::vector<LinearFactor> common_denominator(std::span<const FactoredRational> terms);

/// Decides sum(terms) == rhs exactly: both sides are multiplied by the common
/// denominator and by the lcm of the scalar denominators, then compared as
/// Laurent polynomials.
[[nodiscard]] bool sum_equals(std::span<const FactoredRational> terms, const FactoredRational& rhs);
[[nodiscard]] bool equivalent(const FactoredRational& a, const FactoredRational& b);

}  // namespace qdyson
