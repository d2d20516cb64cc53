#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qdyson {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in `int64_t` are stored inline and never touch the heap;
/// anything larger is promoted to a GMP integer.  Results are demoted back to
/// the inline form whenever they fit, so `is_small()` is canonical: two equal
/// values always share a representation.
class Integer {
public:
    Integer() noexcept = default;
    Integer(int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) noexcept : small_(v) {}      // NOLINT(google-explicit-constructor)
    explicit Integer(const mpz_class& v);
    explicit Integer(std::string_view decimal);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
    [[nodiscard]] int sign() const noexcept;
    /// Only meaningful when is_small().
    [[nodiscard]] int64_t small_value() const noexcept { return small_; }
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] std::string to_string() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    /// this += a * b without temporaries in the common case.
    void add_product(const Integer& a, const Integer& b);
    void negate();

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Integer operator-(Integer v) {
        v.negate();
        return v;
    }

    friend bool operator==(const Integer& a, const Integer& b);
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

    [[nodiscard]] Integer abs() const;

private:
    void set_from_mpz(const mpz_class& v);
    void set_from_mpz(mpz_class&& v);

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);
/// Exact quotient; throws DomainError when `d` does not divide `n`.
[[nodiscard]] Integer divexact(const Integer& n, const Integer& d);
[[nodiscard]] bool divides(const Integer& d, const Integer& n);

}  // namespace qdyson
