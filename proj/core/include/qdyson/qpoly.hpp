#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdyson/integer.hpp"

namespace qdyson {

/// Dense polynomial in the formal variable q with integer coefficients.
///
/// `coeffs()[d]` is the coefficient of q^d.  The representation is canonical:
/// there are no trailing zeros, so the zero polynomial has empty support.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Integer> coeffs);
    QPoly(std::initializer_list<int64_t> coeffs);

    static QPoly constant(Integer c);
    /// c * q^degree, degree >= 0.
    static QPoly monomial(Integer c, int degree);
    static QPoly one() { return constant(Integer(1)); }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// True for c * q^k.
    [[nodiscard]] bool is_monomial() const noexcept;
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    [[nodiscard]] int order() const noexcept;
    [[nodiscard]] std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Integer coeff(int degree) const;
    [[nodiscard]] const Integer& leading() const { return coeffs_.back(); }

    /// Multiply by q^k; k may be negative as long as the result stays a polynomial.
    [[nodiscard]] QPoly shifted(int k) const;
    /// gcd of the coefficients, made positive (0 for the zero polynomial).
    [[nodiscard]] Integer content() const;
    [[nodiscard]] QPoly primitive_part() const;
    [[nodiscard]] QPoly scaled(const Integer& c) const;
    [[nodiscard]] QPoly divided_by(const Integer& c) const;  // exact

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    /// this += a * b, the inner loop of coefficient extraction.
    void add_product(const QPoly& a, const QPoly& b);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Canonical text: ascending q-degree, e.g. "1 + q - 2*q^3"; "0" for zero.
    [[nodiscard]] std::string to_string() const;
    static QPoly parse(std::string_view text);

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Exact quotient n / d over Z[q]; throws DomainError if d does not divide n.
[[nodiscard]] QPoly divexact(const QPoly& n, const QPoly& d);
/// Greatest common divisor over Z[q]: positive leading coefficient, includes
/// the integer gcd of the contents.
[[nodiscard]] QPoly gcd(const QPoly& a, const QPoly& b);

/// Element of Q(q) kept as a reduced fraction of integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 over Z[q] (including integer content),
/// den has a positive leading coefficient, and zero is 0/1.  Equality of
/// canonical forms is therefore equality of rational functions.
class ScalarQ {
public:
    ScalarQ() : den_(QPoly::one()) {}
    ScalarQ(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {}  // NOLINT(google-explicit-constructor)
    ScalarQ(Integer c) : ScalarQ(QPoly::constant(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    ScalarQ(int64_t c) : ScalarQ(Integer(c)) {}                    // NOLINT(google-explicit-constructor)
    ScalarQ(int c) : ScalarQ(Integer(c)) {}                        // NOLINT(google-explicit-constructor)

    /// num / den in canonical form; throws DivisionByZero when den == 0.
    static ScalarQ fraction(QPoly num, QPoly den);
    /// q^e for any integer e.
    static ScalarQ q_power(int e);

    [[nodiscard]] const QPoly& num() const noexcept { return num_; }
    [[nodiscard]] const QPoly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const noexcept { return den_.is_one(); }

    ScalarQ& operator+=(const ScalarQ& rhs);
    ScalarQ& operator-=(const ScalarQ& rhs);
    ScalarQ& operator*=(const ScalarQ& rhs);
    ScalarQ& operator/=(const ScalarQ& rhs);
    /// this += a * b; skips normalization when everything is polynomial.
    void add_product(const ScalarQ& a, const ScalarQ& b);

    friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
    friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
    friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
    friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }
    friend ScalarQ operator-(ScalarQ a);
    friend bool operator==(const ScalarQ&, const ScalarQ&) = default;

    /// "1 + q" when the denominator is 1, otherwise "(num) / (den)".
    [[nodiscard]] std::string to_string() const;
    static ScalarQ parse(std::string_view text);

private:
    ScalarQ(QPoly num, QPoly den, bool /*already_canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    QPoly num_;
    QPoly den_;
};

enum class ArithOp { add, sub, mul, div };

[[nodiscard]] ScalarQ scalar_arith(const ScalarQ& a, const ScalarQ& b, ArithOp op);

/// (q^c; q)_k = prod_{t=0}^{k-1} (1 - q^{c+t}).  Polynomial whenever c >= 0.
[[nodiscard]] ScalarQ poch_int(int c, int k);
/// (q)_k as a polynomial.
[[nodiscard]] QPoly q_factorial(int k);
/// Gaussian binomial [n choose k]_q.  Zero when k < 0 or k > n >= 0; for
/// n < 0 only k <= 0 is accepted, other values throw DomainError.
[[nodiscard]] QPoly q_binomial(int64_t n, int64_t k);
/// (q)_n / prod (q)_{t_i}, with an implicit extra part n - sum(parts).
[[nodiscard]] QPoly q_multinomial(int n, std::span<const int> parts);

}  // namespace qdyson
