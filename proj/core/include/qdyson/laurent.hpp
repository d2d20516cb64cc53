#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdyson/qpoly.hpp"

namespace qdyson {

inline constexpr int kMaxVars = 12;

/// Ordered, named variable set shared by all polynomials of one context.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(names_.size()); }
    [[nodiscard]] const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    [[nodiscard]] std::optional<int> index_of(std::string_view name) const;
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarSet>;

/// x1..xn followed by w1..ws.
[[nodiscard]] Vars dyson_vars(int n, int s = 0);
[[nodiscard]] Vars make_vars(std::vector<std::string> names);
/// The same set with variable `index` removed.
[[nodiscard]] Vars drop_var(const Vars& vars, int index);
[[nodiscard]] bool same_vars(const Vars& a, const Vars& b) noexcept;

/// Exponent vector over a fixed variable set; entries may be negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars);
    Monomial(std::initializer_list<int> exps);
    static Monomial from(std::span<const int> exps);

    [[nodiscard]] int size() const noexcept { return size_; }
    int operator[](int i) const noexcept { return exps_[static_cast<size_t>(i)]; }
    int& operator[](int i) noexcept { return exps_[static_cast<size_t>(i)]; }
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] int total_degree() const noexcept;
    [[nodiscard]] std::span<const int> exponents() const noexcept { return {exps_.data(), static_cast<size_t>(size_)}; }
    [[nodiscard]] Monomial inverse() const;
    [[nodiscard]] Monomial pow(int k) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
    /// Graded lexicographic: total degree first, then lexicographic.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

    [[nodiscard]] size_t hash() const noexcept;

private:
    std::array<int, kMaxVars> exps_{};
    int size_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Finitely supported map Monomial -> ScalarQ, kept sorted (graded lex) with
/// no stored zero coefficients.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        ScalarQ coef;
    };

    explicit LaurentPoly(Vars vars);
    static LaurentPoly constant(Vars vars, ScalarQ c);
    static LaurentPoly term(Vars vars, Monomial m, ScalarQ c);
    /// vars[index]^power
    static LaurentPoly variable(Vars vars, int index, int power = 1);
    /// Sorts, merges equal monomials and drops zeros.
    static LaurentPoly from_terms(Vars vars, std::vector<Term> terms);

    [[nodiscard]] const Vars& vars() const noexcept { return vars_; }
    [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
    [[nodiscard]] size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_one() const noexcept;

    [[nodiscard]] ScalarQ coefficient(const Monomial& e) const;
    [[nodiscard]] const ScalarQ* find(const Monomial& e) const;
    [[nodiscard]] ScalarQ constant_term() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const ScalarQ& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const ScalarQ& c) { return a *= c; }
    friend LaurentPoly operator-(LaurentPoly a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Re-express over `target`, sending variable k to target variable index_map[k].
    [[nodiscard]] LaurentPoly embedded(const Vars& target, std::span<const int> index_map) const;

    /// Terms joined by " + ", each "(coef) * x1^e1 * w1^f1"; coefficient 1 omitted.
    [[nodiscard]] std::string to_string() const;
    static LaurentPoly parse(const Vars& vars, std::string_view text);

private:
    void check_context(const LaurentPoly& other) const;

    Vars vars_;
    std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };

[[nodiscard]] LaurentPoly lp_arith(const LaurentPoly& p, const LaurentPoly& r, PolyOp op);

/// (q^shift * m; q)_k = prod_{t=0}^{k-1} (1 - q^{shift+t} m).
[[nodiscard]] LaurentPoly poch_monomial(const Vars& vars, const Monomial& m, int k, int shift = 0);

/// Substitute vars[var] -> q^q_exp * target.  `target` is over p.vars() and
/// must not involve `var`; the result lives over drop_var(p.vars(), var).
[[nodiscard]] LaurentPoly substitute(const LaurentPoly& p, int var, int q_exp, const Monomial& target);

/// Minimum exponent of vars[var] over the support; throws DomainError on zero.
[[nodiscard]] int lowest_degree_in(const LaurentPoly& p, int var);

}  // namespace qdyson
