#include "qdyson/integer.hpp"

#include "qdyson/errors.hpp"

namespace qdyson {

namespace {

mpz_class mpz_from_int64(int64_t v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) { set_from_mpz(v); }

Integer::Integer(std::string_view decimal) {
    mpz_class v;
    if (v.set_str(std::string(decimal), 10) != 0) {
        throw DomainError("not an integer: '" + std::string(decimal) + "'");
    }
    set_from_mpz(std::move(v));
}

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
    if (this != &other) {
        small_ = other.small_;
        big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Integer::set_from_mpz(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()) != 0) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(v);
    }
}

void Integer::set_from_mpz(mpz_class&& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()) != 0) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(std::move(v));
    }
}

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_from_mpz(to_mpz() + rhs.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_from_mpz(to_mpz() - rhs.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_from_mpz(to_mpz() * rhs.to_mpz());
    return *this;
}

void Integer::add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t p;
        int64_t r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
            !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    mpz_class acc = to_mpz();
    mpz_addmul(acc.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    set_from_mpz(std::move(acc));
}

void Integer::negate() {
    if (!big_ && small_ != INT64_MIN) {
        small_ = -small_;
        return;
    }
    set_from_mpz(-to_mpz());
}

Integer Integer::abs() const {
    Integer r(*this);
    if (r.sign() < 0) r.negate();
    return r;
}

bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    // Canonical form: a big value never fits in int64.
    return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_value() != INT64_MIN &&
        b.small_value() != INT64_MIN) {
        uint64_t x = static_cast<uint64_t>(a.small_value() < 0 ? -a.small_value() : a.small_value());
        uint64_t y = static_cast<uint64_t>(b.small_value() < 0 ? -b.small_value() : b.small_value());
        while (y != 0) {
            const uint64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(static_cast<int64_t>(x));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

bool divides(const Integer& d, const Integer& n) {
    if (d.is_zero()) return n.is_zero();
    if (d.is_small() && n.is_small() && d.small_value() != -1) {
        return n.small_value() % d.small_value() == 0;
    }
    return mpz_divisible_p(n.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer divexact(const Integer& n, const Integer& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (d.is_small() && n.is_small() && d.small_value() != -1) {
        if (n.small_value() % d.small_value() != 0) {
            throw DomainError("inexact integer division " + n.to_string() + " / " + d.to_string());
        }
        return Integer(n.small_value() / d.small_value());
    }
    if (!divides(d, n)) {
        throw DomainError("inexact integer division " + n.to_string() + " / " + d.to_string());
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), n.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t());
    return Integer(r);
}

}  // namespace qdyson
