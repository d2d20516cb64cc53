#include "qdyson/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qdyson/errors.hpp"

namespace qdyson {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<int64_t> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (int64_t c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(Integer c) {
    QPoly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

QPoly QPoly::monomial(Integer c, int degree) {
    if (degree < 0) throw DomainError("QPoly::monomial: negative degree");
    QPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.resize(static_cast<size_t>(degree) + 1);
    p.coeffs_.back() = std::move(c);
    return p;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool QPoly::is_monomial() const noexcept {
    if (coeffs_.empty()) return false;
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

int QPoly::order() const noexcept {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

Integer QPoly::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Integer(0);
    return coeffs_[static_cast<size_t>(degree)];
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    if (k > 0) {
        r.coeffs_.resize(static_cast<size_t>(k));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }
    if (order() < -k) throw DomainError("QPoly::shifted: result would have negative powers of q");
    r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
    return r;
}

Integer QPoly::content() const {
    Integer g(0);
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer c = content();
    if (leading().sign() < 0) c.negate();
    return divided_by(c);
}

QPoly QPoly::scaled(const Integer& c) const {
    if (c.is_zero()) return {};
    QPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QPoly QPoly::divided_by(const Integer& c) const {
    if (c.is_one()) return *this;
    QPoly r(*this);
    for (auto& x : r.coeffs_) x = divexact(x, c);
    return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

void QPoly::add_product(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < need) coeffs_.resize(need);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Integer& ai = a.coeffs_[i];
        if (ai.is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[i + j].add_product(ai, b.coeffs_[j]);
    }
    trim();
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.add_product(a, b);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c.negate();
    return a;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        const Integer& c = coeffs_[d];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Integer mag = c.abs();
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            out << mag.to_string();
            continue;
        }
        if (!mag.is_one()) out << mag.to_string() << '*';
        out << 'q';
        if (d > 1) out << '^' << d;
    }
    return out.str();
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::string_view digits() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }
    int small_int() {
        const bool neg = accept('-');
        const std::string_view d = digits();
        int v = 0;
        for (char ch : d) v = v * 10 + (ch - '0');
        return neg ? -v : v;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(s_) +
                          "': " + what);
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
};

QPoly parse_qpoly(Cursor& cur) {
    std::vector<Integer> coeffs;
    bool first = true;
    while (true) {
        bool negative = false;
        if (first) {
            negative = cur.accept('-');
        } else if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            break;
        }
        first = false;
        Integer c(1);
        int degree = 0;
        bool have_number = false;
        if (cur.at_digit()) {
            c = Integer(cur.digits());
            have_number = true;
        }
        bool have_q = false;
        if (have_number && cur.accept('*')) {
            if (cur.peek() != 'q') cur.fail("expected 'q' after '*'");
        }
        if (cur.accept('q')) {
            have_q = true;
            degree = 1;
            if (cur.accept('^')) degree = cur.small_int();
        }
        if (!have_number && !have_q) cur.fail("expected a term");
        if (degree < 0) cur.fail("negative q-power in a polynomial");
        if (negative) c.negate();
        if (coeffs.size() <= static_cast<size_t>(degree)) coeffs.resize(static_cast<size_t>(degree) + 1);
        coeffs[static_cast<size_t>(degree)] += c;
    }
    return QPoly(std::move(coeffs));
}

QPoly parse_group(Cursor& cur) {
    if (cur.accept('(')) {
        QPoly p = parse_qpoly(cur);
        cur.expect(')');
        return p;
    }
    return parse_qpoly(cur);
}

}  // namespace

QPoly QPoly::parse(std::string_view text) {
    Cursor cur(text);
    QPoly p = parse_qpoly(cur);
    if (!cur.eof()) cur.fail("trailing input");
    return p;
}

// ---------------------------------------------------------------- division, gcd

QPoly divexact(const QPoly& n, const QPoly& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) return {};
    if (d.is_one()) return n;
    const int dd = d.degree();
    if (n.degree() < dd) throw DomainError("divexact: divisor does not divide dividend");
    std::vector<Integer> rem(n.coeffs().begin(), n.coeffs().end());
    std::vector<Integer> quo(static_cast<size_t>(n.degree() - dd + 1));
    const Integer& lead = d.leading();
    const auto dc = d.coeffs();
    for (int k = n.degree() - dd; k >= 0; --k) {
        Integer& top = rem[static_cast<size_t>(k + dd)];
        if (top.is_zero()) continue;
        if (!divides(lead, top)) throw DomainError("divexact: divisor does not divide dividend");
        Integer f = divexact(top, lead);
        for (int i = 0; i <= dd; ++i) {
            rem[static_cast<size_t>(k + i)].add_product(-f, dc[static_cast<size_t>(i)]);
        }
        quo[static_cast<size_t>(k)] = std::move(f);
    }
    for (const auto& r : rem) {
        if (!r.is_zero()) throw DomainError("divexact: nonzero remainder");
    }
    return QPoly(std::move(quo));
}

namespace {

// Scaled pseudo-remainder: some lc(b)^k * a mod b.
QPoly pseudo_remainder(QPoly a, const QPoly& b) {
    const int db = b.degree();
    const Integer& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const Integer la = a.leading();
        const int shift = a.degree() - db;
        QPoly t = b.shifted(shift).scaled(la);
        a = a.scaled(lb);
        a -= t;
    }
    return a;
}

QPoly primitive_gcd(QPoly a, QPoly b) {
    // a, b primitive with nonzero constant term.
    if (a.degree() < b.degree()) std::swap(a, b);
    while (true) {
        if (b.degree() == 0) return QPoly::one();
        QPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return b;
        a = std::move(b);
        b = r.primitive_part();
    }
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.is_zero() ? QPoly{} : (b.leading().sign() < 0 ? -b : b);
    if (b.is_zero()) return a.leading().sign() < 0 ? -a : a;
    const int common_order = std::min(a.order(), b.order());
    const QPoly ar = a.shifted(-a.order());
    const QPoly br = b.shifted(-b.order());
    const Integer content = gcd(ar.content(), br.content());
    QPoly g;
    if (ar.degree() == 0 || br.degree() == 0) {
        g = QPoly::one();
    } else if (ar.primitive_part() == br.primitive_part()) {
        g = ar.primitive_part();
    } else {
        g = primitive_gcd(ar.primitive_part(), br.primitive_part());
    }
    return g.scaled(content).shifted(common_order);
}

// ---------------------------------------------------------------- ScalarQ

ScalarQ ScalarQ::fraction(QPoly num, QPoly den) {
    ScalarQ r(std::move(num), std::move(den), true);
    r.normalize();
    return r;
}

ScalarQ ScalarQ::q_power(int e) {
    if (e >= 0) return ScalarQ(QPoly::monomial(Integer(1), e));
    return ScalarQ(QPoly::one(), QPoly::monomial(Integer(1), -e), true);
}

void ScalarQ::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    if (den_.is_one()) return;
    if (den_.is_monomial()) {
        const int s = std::min(den_.order(), num_.order());
        if (s > 0) {
            num_ = num_.shifted(-s);
            den_ = den_.shifted(-s);
        }
        const Integer g = gcd(num_.content(), den_.leading());
        if (!g.is_one()) {
            num_ = num_.divided_by(g);
            den_ = den_.divided_by(g);
        }
    } else {
        const QPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& rhs) {
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ += rhs.num_;
        return *this;
    }
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& rhs) { return *this += -rhs; }

ScalarQ& ScalarQ::operator*=(const ScalarQ& rhs) {
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ *= rhs.num_;
        return *this;
    }
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

ScalarQ& ScalarQ::operator/=(const ScalarQ& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

void ScalarQ::add_product(const ScalarQ& a, const ScalarQ& b) {
    if (den_.is_one() && a.den_.is_one() && b.den_.is_one()) {
        num_.add_product(a.num_, b.num_);
        return;
    }
    *this += a * b;
}

ScalarQ operator-(ScalarQ a) {
    a.num_ = -a.num_;
    return a;
}

std::string ScalarQ::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

ScalarQ ScalarQ::parse(std::string_view text) {
    Cursor cur(text);
    QPoly num = parse_group(cur);
    QPoly den = QPoly::one();
    if (cur.accept('/')) den = parse_group(cur);
    if (!cur.eof()) cur.fail("trailing input");
    return fraction(std::move(num), std::move(den));
}

ScalarQ scalar_arith(const ScalarQ& a, const ScalarQ& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw DomainError("scalar_arith: unknown operation");
}

// ---------------------------------------------------------------- q-combinatorics

namespace {

QPoly one_minus_q_power(int e) {
    // 1 - q^e for e >= 0.
    if (e == 0) return {};
    QPoly p = QPoly::monomial(Integer(-1), e);
    p += QPoly::one();
    return p;
}

}  // namespace

ScalarQ poch_int(int c, int k) {
    if (k < 0) throw DomainError("poch_int: negative length");
    // Split into the nonnegative-exponent part (a polynomial) and the
    // negative-exponent part, where 1 - q^{-e} = -(1 - q^e) / q^e.
    QPoly num = QPoly::one();
    int den_power = 0;
    bool negate = false;
    for (int t = 0; t < k; ++t) {
        const int e = c + t;
        if (e == 0) return ScalarQ();
        if (e > 0) {
            num *= one_minus_q_power(e);
        } else {
            num *= one_minus_q_power(-e);
            den_power += -e;
            negate = !negate;
        }
    }
    if (negate) num = -num;
    if (den_power == 0) return ScalarQ(std::move(num));
    return ScalarQ::fraction(std::move(num), QPoly::monomial(Integer(1), den_power));
}

QPoly q_factorial(int k) {
    if (k < 0) throw DomainError("q_factorial: negative argument");
    QPoly r = QPoly::one();
    for (int t = 1; t <= k; ++t) r *= one_minus_q_power(t);
    return r;
}

QPoly q_binomial(int64_t n, int64_t k) {
    if (k < 0) return {};
    if (n < 0) {
        if (k == 0) return QPoly::one();
        throw DomainError("q_binomial: negative n=" + std::to_string(n) + " with k=" + std::to_string(k) +
                          " is not a polynomial");
    }
    if (k > n) return {};
    const int kk = static_cast<int>(std::min(k, n - k));
    const int nn = static_cast<int>(n);
    QPoly num = QPoly::one();
    for (int t = 0; t < kk; ++t) num *= one_minus_q_power(nn - kk + 1 + t);
    return divexact(num, q_factorial(kk));
}

QPoly q_multinomial(int n, std::span<const int> parts) {
    if (n < 0) throw DomainError("q_multinomial: negative total");
    int64_t remaining = n;
    QPoly r = QPoly::one();
    for (int t : parts) {
        if (t < 0) throw DomainError("q_multinomial: negative part");
        if (t > remaining) throw DomainError("q_multinomial: parts exceed total");
        r *= q_binomial(remaining, t);
        remaining -= t;
    }
    return r;
}

}  // namespace qdyson
