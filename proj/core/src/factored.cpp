#include "qdyson/factored.hpp"

#include <algorithm>

#include "qdyson/errors.hpp"

namespace qdyson {

LaurentPoly expand(const Vars& vars, const LinearFactor& f) {
    return LaurentPoly::constant(vars, ScalarQ(1)) - LaurentPoly::term(vars, f.mono, ScalarQ::q_power(f.q_exp));
}

FactoredRational::FactoredRational(Vars vars)
    : scalar_(1), numerator_(LaurentPoly::constant(vars, ScalarQ(1))) {}

FactoredRational::FactoredRational(ScalarQ scalar, LaurentPoly numerator, std::vector<LinearFactor> denominators)
    : scalar_(std::move(scalar)), numerator_(std::move(numerator)), denominators_(std::move(denominators)) {
    for (const auto& f : denominators_) {
        if (f.mono.size() != numerator_.vars()->size()) throw ContextMismatch("denominator factor width");
        if (f.mono.is_one() && f.q_exp == 0) throw DivisionByZero();
    }
    std::sort(denominators_.begin(), denominators_.end());
}

void FactoredRational::remove_denominator(const LinearFactor& f) {
    auto it = std::lower_bound(denominators_.begin(), denominators_.end(), f);
    if (it == denominators_.end() || !(*it == f)) throw DomainError("remove_denominator: factor not present");
    denominators_.erase(it);
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& rhs) {
    scalar_ *= rhs.scalar_;
    numerator_ *= rhs.numerator_;
    std::vector<LinearFactor> merged;
    merged.reserve(denominators_.size() + rhs.denominators_.size());
    std::merge(denominators_.begin(), denominators_.end(), rhs.denominators_.begin(), rhs.denominators_.end(),
               std::back_inserter(merged));
    denominators_ = std::move(merged);
    return *this;
}

FactoredRational& FactoredRational::operator*=(const LaurentPoly& rhs) {
    numerator_ *= rhs;
    return *this;
}

FactoredRational& FactoredRational::operator*=(const ScalarQ& rhs) {
    scalar_ *= rhs;
    return *this;
}

FactoredRational FactoredRational::substituted(int var, int q_exp, const Monomial& target) const {
    LaurentPoly num = substitute(numerator_, var, q_exp, target);
    std::vector<LinearFactor> dens;
    dens.reserve(denominators_.size());
    for (const auto& f : denominators_) {
        // 1 - q^e m  ->  1 - q^{e + q_exp*k} m' where k is m's exponent of var.
        const int k = f.mono[var];
        const Monomial full = f.mono * target.pow(k);
        Monomial m(num.vars()->size());
        for (int i = 0, dst = 0; i < full.size(); ++i) {
            if (i == var) continue;
            m[dst++] = full[i];
        }
        dens.push_back({f.q_exp + q_exp * k, m});
    }
    return FactoredRational(scalar_, std::move(num), std::move(dens));
}

FactoredRational FactoredRational::embedded(const Vars& target, std::span<const int> index_map) const {
    LaurentPoly num = numerator_.embedded(target, index_map);
    std::vector<LinearFactor> dens;
    for (const auto& f : denominators_) {
        Monomial m(target->size());
        for (int k = 0; k < f.mono.size(); ++k) {
            if (f.mono[k] != 0) m[index_map[static_cast<size_t>(k)]] += f.mono[k];
        }
        dens.push_back({f.q_exp, m});
    }
    return FactoredRational(scalar_, std::move(num), std::move(dens));
}

std::string FactoredRational::to_string() const {
    std::string s = "(" + scalar_.to_string() + ") * [" + numerator_.to_string() + "]";
    for (const auto& f : denominators_) s += " / (1 - " + LaurentPoly::term(vars(), f.mono, ScalarQ::q_power(f.q_exp)).to_string() + ")";
    return s;
}

std::vector<LinearFactor> common_denominator(std::span<const FactoredRational> terms) {
    std::vector<LinearFactor> lcd;
    for (const auto& t : terms) {
        std::vector<LinearFactor> merged;
        std::set_union(lcd.begin(), lcd.end(), t.denominators().begin(), t.denominators().end(),
                       std::back_inserter(merged));
        lcd = std::move(merged);
    }
    return lcd;
}

namespace {

QPoly lcm(const QPoly& a, const QPoly& b) { return divexact(a * b, gcd(a, b)); }

// scalar * numerator * prod(lcd \ own denominators).
LaurentPoly cleared(const FactoredRational& t, const std::vector<LinearFactor>& lcd, const QPoly& scalar_lcm) {
    std::vector<LinearFactor> missing;
    std::set_difference(lcd.begin(), lcd.end(), t.denominators().begin(), t.denominators().end(),
                        std::back_inserter(missing));
    const ScalarQ s = t.scalar() * ScalarQ(scalar_lcm);
    LaurentPoly p = t.numerator() * s;
    for (const auto& f : missing) p *= expand(t.vars(), f);
    return p;
}

}  // namespace

bool sum_equals(std::span<const FactoredRational> terms, const FactoredRational& rhs) {
    std::vector<FactoredRational> all(terms.begin(), terms.end());
    all.push_back(rhs);
    const auto lcd = common_denominator(all);
    QPoly scalar_lcm = QPoly::one();
    for (const auto& t : all) {
        if (!same_vars(t.vars(), rhs.vars())) throw ContextMismatch("sum_equals: mixed variable sets");
        scalar_lcm = lcm(scalar_lcm, t.scalar().den());
    }
    LaurentPoly lhs(rhs.vars());
    for (const auto& t : terms) lhs += cleared(t, lcd, scalar_lcm);
    return lhs == cleared(rhs, lcd, scalar_lcm);
}

bool equivalent(const FactoredRational& a, const FactoredRational& b) {
    return sum_equals(std::span<const FactoredRational>(&a, 1), b);
}

}  // namespace qdyson
