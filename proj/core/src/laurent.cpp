#include "qdyson/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "qdyson/errors.hpp"

namespace qdyson {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<size_t>(kMaxVars)) {
        throw DomainError("too many variables: " + std::to_string(names_.size()) + " > " +
                          std::to_string(kMaxVars));
    }
}

std::optional<int> VarSet::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

Vars make_vars(std::vector<std::string> names) { return std::make_shared<const VarSet>(std::move(names)); }

Vars dyson_vars(int n, int s) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= s; ++j) names.push_back("w" + std::to_string(j));
    return make_vars(std::move(names));
}

Vars drop_var(const Vars& vars, int index) {
    std::vector<std::string> names = vars->names();
    names.erase(names.begin() + index);
    return make_vars(std::move(names));
}

bool same_vars(const Vars& a, const Vars& b) noexcept { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int nvars) : size_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw DomainError("Monomial: bad variable count");
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
    std::copy(exps.begin(), exps.end(), exps_.begin());
}

Monomial Monomial::from(std::span<const int> exps) {
    Monomial m(static_cast<int>(exps.size()));
    std::copy(exps.begin(), exps.end(), m.exps_.begin());
    return m;
}

bool Monomial::is_one() const noexcept {
    for (int i = 0; i < size_; ++i) {
        if (exps_[static_cast<size_t>(i)] != 0) return false;
    }
    return true;
}

int Monomial::total_degree() const noexcept {
    int d = 0;
    for (int i = 0; i < size_; ++i) d += exps_[static_cast<size_t>(i)];
    return d;
}

Monomial Monomial::inverse() const {
    Monomial r(size_);
    for (int i = 0; i < size_; ++i) r[i] = -(*this)[i];
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r(size_);
    for (int i = 0; i < size_; ++i) r[i] = (*this)[i] * k;
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (int i = 0; i < a.size_; ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (int i = 0; i < a.size_; ++i) r[i] = a[i] - b[i];
    return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    const int n = std::min(a.size_, b.size_);
    for (int i = 0; i < n; ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return a.size_ <=> b.size_;
}

size_t Monomial::hash() const noexcept {
    size_t h = 1469598103934665603ULL;
    for (int i = 0; i < size_; ++i) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(exps_[static_cast<size_t>(i)]));
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Vars vars) : vars_(std::move(vars)) {
    if (!vars_) throw DomainError("LaurentPoly: null variable set");
}

LaurentPoly LaurentPoly::constant(Vars vars, ScalarQ c) {
    const int n = vars->size();
    return term(std::move(vars), Monomial(n), std::move(c));
}

LaurentPoly LaurentPoly::term(Vars vars, Monomial m, ScalarQ c) {
    LaurentPoly p(std::move(vars));
    if (m.size() != p.vars_->size()) throw ContextMismatch("monomial width does not match variable set");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::variable(Vars vars, int index, int power) {
    Monomial m(vars->size());
    if (index < 0 || index >= vars->size()) throw DomainError("variable index out of range");
    m[index] = power;
    return term(std::move(vars), m, ScalarQ(1));
}

LaurentPoly LaurentPoly::from_terms(Vars vars, std::vector<Term> terms) {
    LaurentPoly p(std::move(vars));
    for (const auto& t : terms) {
        if (t.mono.size() != p.vars_->size()) throw ContextMismatch("monomial width does not match variable set");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    return p;
}

bool LaurentPoly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one();
}

const ScalarQ* LaurentPoly::find(const Monomial& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Monomial& m) { return t.mono < m; });
    if (it != terms_.end() && it->mono == e) return &it->coef;
    return nullptr;
}

ScalarQ LaurentPoly::coefficient(const Monomial& e) const {
    if (e.size() != vars_->size()) throw ContextMismatch("monomial width does not match variable set");
    const ScalarQ* c = find(e);
    return c ? *c : ScalarQ();
}

ScalarQ LaurentPoly::constant_term() const { return coefficient(Monomial(vars_->size())); }

void LaurentPoly::check_context(const LaurentPoly& other) const {
    if (!same_vars(vars_, other.vars_)) throw ContextMismatch("polynomials over different variable sets");
}

namespace {

template <typename Combine>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           std::span<const LaurentPoly::Term> b, Combine combine) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back({b[j].mono, combine(ScalarQ(), b[j].coef)});
            ++j;
        } else {
            ScalarQ c = combine(a[i].coef, b[j].coef);
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_context(rhs);
    terms_ = merge_terms(terms_, rhs.terms_, [](const ScalarQ& x, const ScalarQ& y) { return x + y; });
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_context(rhs);
    terms_ = merge_terms(terms_, rhs.terms_, [](const ScalarQ& x, const ScalarQ& y) { return x - y; });
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_context(b);
    LaurentPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coef;
    if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coef;
    std::unordered_map<Monomial, ScalarQ, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) acc[ta.mono * tb.mono].add_product(ta.coef, tb.coef);
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return x.mono < y.mono; });
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ScalarQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& t : a.terms_) t.coef = -t.coef;
    return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_context(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::embedded(const Vars& target, std::span<const int> index_map) const {
    if (static_cast<int>(index_map.size()) != vars_->size()) throw DomainError("embedded: index map size");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->size());
        for (int k = 0; k < vars_->size(); ++k) {
            const int dst = index_map[static_cast<size_t>(k)];
            if (dst < 0 || dst >= target->size()) {
                if (t.mono[k] != 0) throw DomainError("embedded: variable has no image");
                continue;
            }
            m[dst] += t.mono[k];
        }
        out.push_back({m, t.coef});
    }
    return from_terms(target, std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out << " + ";
        const auto& t = terms_[i];
        std::vector<std::string> factors;
        if (!t.coef.is_one()) factors.push_back("(" + t.coef.to_string() + ")");
        for (int k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k] == 0) continue;
            std::string f = vars_->name(k);
            if (t.mono[k] != 1) f += "^" + std::to_string(t.mono[k]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) factors.emplace_back("1");
        for (size_t f = 0; f < factors.size(); ++f) {
            if (f > 0) out << " * ";
            out << factors[f];
        }
    }
    return out.str();
}

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s[i] == sep) {
            parts.push_back(trim_view(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim_view(s.substr(start)));
    return parts;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const Vars& vars, std::string_view text) {
    text = trim_view(text);
    if (text == "0") return LaurentPoly(vars);
    std::vector<Term> terms;
    for (std::string_view term_text : split_top_level(text, '+')) {
        if (term_text.empty()) throw DomainError("empty term in '" + std::string(text) + "'");
        Term t{Monomial(vars->size()), ScalarQ(1)};
        for (std::string_view factor : split_top_level(term_text, '*')) {
            if (factor.empty()) throw DomainError("empty factor in '" + std::string(term_text) + "'");
            if (factor.front() == '(') {
                if (factor.back() != ')') throw DomainError("unbalanced parentheses in '" + std::string(factor) + "'");
                t.coef *= ScalarQ::parse(factor.substr(1, factor.size() - 2));
                continue;
            }
            if (factor == "1") continue;
            const size_t caret = factor.find('^');
            const std::string_view name = trim_view(factor.substr(0, caret));
            const auto idx = vars->index_of(name);
            if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
            int e = 1;
            if (caret != std::string_view::npos) e = std::stoi(std::string(trim_view(factor.substr(caret + 1))));
            t.mono[*idx] += e;
        }
        terms.push_back(std::move(t));
    }
    return from_terms(vars, std::move(terms));
}

// ---------------------------------------------------------------- operations

LaurentPoly lp_arith(const LaurentPoly& p, const LaurentPoly& r, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + r;
        case PolyOp::sub: return p - r;
        case PolyOp::mul: return p * r;
    }
    throw DomainError("lp_arith: unknown operation");
}

LaurentPoly poch_monomial(const Vars& vars, const Monomial& m, int k, int shift) {
    if (k < 0) throw DomainError("poch_monomial: negative length");
    LaurentPoly result = LaurentPoly::constant(vars, ScalarQ(1));
    const LaurentPoly one = LaurentPoly::constant(vars, ScalarQ(1));
    for (int t = 0; t < k; ++t) {
        result *= one - LaurentPoly::term(vars, m, ScalarQ::q_power(shift + t));
    }
    return result;
}

LaurentPoly substitute(const LaurentPoly& p, int var, int q_exp, const Monomial& target) {
    const Vars& vars = p.vars();
    if (var < 0 || var >= vars->size()) throw DomainError("substitute: variable index out of range");
    if (target.size() != vars->size()) throw ContextMismatch("substitute: target width does not match");
    if (target[var] != 0) throw DomainError("substitute: target involves the substituted variable");
    const Vars reduced = drop_var(vars, var);
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        const int e = t.mono[var];
        Monomial full = t.mono * target.pow(e);
        Monomial m(reduced->size());
        for (int k = 0, dst = 0; k < vars->size(); ++k) {
            if (k == var) continue;
            m[dst++] = full[k];
        }
        out.push_back({m, t.coef * ScalarQ::q_power(q_exp * e)});
    }
    return LaurentPoly::from_terms(reduced, std::move(out));
}

int lowest_degree_in(const LaurentPoly& p, int var) {
    if (p.is_zero()) throw DomainError("lowest_degree_in: zero polynomial");
    if (var < 0 || var >= p.vars()->size()) throw DomainError("lowest_degree_in: variable index out of range");
    int lo = p.terms().front().mono[var];
    for (const auto& t : p.terms()) lo = std::min(lo, t.mono[var]);
    return lo;
}

}  // namespace qdyson
