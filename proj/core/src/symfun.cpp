#include "qdyson/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qdyson/errors.hpp"

namespace qdyson {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition must be weakly decreasing: " + to_string());
    }
}

Partition Partition::sorted_from(std::span<const int> entries) {
    std::vector<int> parts(entries.begin(), entries.end());
    for (int p : parts) {
        if (p < 0) throw DomainError("cannot sort a vector with negative entries into a partition");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::drop_front(int k) const {
    if (k >= length()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + std::max(k, 0), parts_.end()));
}

Partition Partition::conjugate() const {
    std::vector<int> parts;
    for (int k = 1; k <= part(1); ++k) {
        int count = 0;
        while (count < length() && parts_[static_cast<size_t>(count)] >= k) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int total, int max_part) {
    std::vector<Partition> out;
    if (total < 0) return out;
    if (max_part <= 0 || max_part > total) max_part = total;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(total, max_part);
    return out;
}

// ---------------------------------------------------------------- alphabets and h

Alphabet build_alphabet(std::span<const int> a, int n0) {
    const int n = static_cast<int>(a.size());
    if (n0 < 0 || n0 > n) throw DomainError("build_alphabet: n0 out of range");
    Alphabet alphabet;
    for (int i = 1; i <= n; ++i) {
        const int ai = a[static_cast<size_t>(i - 1)];
        if (ai < 1) throw DomainError("build_alphabet: a_" + std::to_string(i) + " must be positive");
        const int count = i <= n0 ? ai - 1 : ai;
        for (int e = 0; e < count; ++e) alphabet.letters.push_back({i, e});
    }
    return alphabet;
}

std::vector<LaurentPoly::Term> alphabet_terms(const Alphabet& alphabet, const Vars& vars) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(alphabet.size());
    for (const Letter& l : alphabet.letters) {
        if (l.x_index < 1 || l.x_index > vars->size()) throw DomainError("alphabet letter outside variable set");
        Monomial m(vars->size());
        m[l.x_index - 1] = 1;
        terms.push_back({m, ScalarQ::q_power(l.q_power)});
    }
    return terms;
}

std::vector<LaurentPoly> complete_h_upto(int max_r, const Alphabet& alphabet, const Vars& vars) {
    if (max_r < 0) throw DomainError("complete_h: negative degree");
    std::vector<LaurentPoly> h(static_cast<size_t>(max_r) + 1, LaurentPoly(vars));
    h[0] = LaurentPoly::constant(vars, ScalarQ(1));
    for (const auto& letter : alphabet_terms(alphabet, vars)) {
        const LaurentPoly z = LaurentPoly::term(vars, letter.mono, letter.coef);
        // Ascending d: h[d-1] already includes powers of this letter.
        for (size_t d = 1; d < h.size(); ++d) h[d] += z * h[d - 1];
    }
    return h;
}

std::vector<LaurentPoly> elementary_e_upto(int max_r, const Alphabet& alphabet, const Vars& vars) {
    if (max_r < 0) throw DomainError("elementary_e: negative degree");
    std::vector<LaurentPoly> e(static_cast<size_t>(max_r) + 1, LaurentPoly(vars));
    e[0] = LaurentPoly::constant(vars, ScalarQ(1));
    for (const auto& letter : alphabet_terms(alphabet, vars)) {
        const LaurentPoly z = LaurentPoly::term(vars, letter.mono, letter.coef);
        // Descending d: each letter is used at most once.
        for (size_t d = e.size() - 1; d >= 1; --d) e[d] += z * e[d - 1];
    }
    return e;
}

LaurentPoly complete_h(int r, const Alphabet& alphabet, const Vars& vars) {
    return complete_h_upto(r, alphabet, vars).back();
}

LaurentPoly h_lambda(const Partition& lambda, const Alphabet& alphabet, const Vars& vars) {
    LaurentPoly result = LaurentPoly::constant(vars, ScalarQ(1));
    if (lambda.empty()) return result;
    const auto h = complete_h_upto(lambda.part(1), alphabet, vars);
    for (int p : lambda.parts()) result *= h[static_cast<size_t>(p)];
    return result;
}

namespace {

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m, const Vars& vars) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(vars, ScalarQ(1));
    if (n == 1) return m[0][0];
    LaurentPoly det(vars);
    for (size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][col] * determinant(std::move(minor), vars);
        if (col % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

}  // namespace

LaurentPoly schur_jt(const Partition& lambda, const Alphabet& alphabet, const Vars& vars, int size) {
    const int n = std::max({lambda.length(), 1, size});
    const auto h = complete_h_upto(lambda.part(1) + n - 1, alphabet, vars);
    std::vector<std::vector<LaurentPoly>> m(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int idx = lambda.part(i) - i + j;
            m[static_cast<size_t>(i - 1)].push_back(idx < 0 ? LaurentPoly(vars) : h[static_cast<size_t>(idx)]);
        }
    }
    return determinant(std::move(m), vars);
}

LaurentPoly divide_by_difference(const LaurentPoly& p, const LaurentPoly::Term& z, const LaurentPoly::Term& y) {
    const Vars& vars = p.vars();
    // p / (z - y) = (p / z) / (1 - c*mu) with c*mu = y / z.
    const ScalarQ c = y.coef / z.coef;
    const Monomial mu = y.mono / z.mono;
    const LaurentPoly scaled = p * LaurentPoly::term(vars, z.mono.inverse(), ScalarQ(1) / z.coef);
    if (mu.is_one()) {
        const ScalarQ factor = ScalarQ(1) - c;
        if (factor.is_zero()) throw DivisionByZero();
        return scaled * (ScalarQ(1) / factor);
    }
    // Weight w(m) = <m, mu> rises by |mu|^2 under multiplication by mu, so the
    // lowest-weight terms of the remainder are always quotient terms.
    const auto weight = [&mu](const Monomial& m) {
        int w = 0;
        for (int k = 0; k < m.size(); ++k) w += m[k] * mu[k];
        return w;
    };
    int mu_norm = 0;
    for (int k = 0; k < mu.size(); ++k) mu_norm += mu[k] * mu[k];
    if (scaled.is_zero()) return scaled;
    int max_weight = weight(scaled.terms().front().mono);
    for (const auto& t : scaled.terms()) max_weight = std::max(max_weight, weight(t.mono));

    LaurentPoly quotient(vars);
    LaurentPoly rem = scaled;
    const LaurentPoly cmu = LaurentPoly::term(vars, mu, c);
    while (!rem.is_zero()) {
        int lo = weight(rem.terms().front().mono);
        for (const auto& t : rem.terms()) lo = std::min(lo, weight(t.mono));
        if (lo > max_weight - mu_norm) throw DomainError("divide_by_difference: not an exact division");
        std::vector<LaurentPoly::Term> batch;
        for (const auto& t : rem.terms()) {
            if (weight(t.mono) == lo) batch.push_back(t);
        }
        const LaurentPoly b = LaurentPoly::from_terms(vars, std::move(batch));
        quotient += b;
        rem -= b;
        rem += b * cmu;
    }
    return quotient;
}

LaurentPoly schur_bialternant(const Partition& lambda, std::span<const LaurentPoly::Term> letters,
                              const Vars& vars) {
    const int n = static_cast<int>(letters.size());
    if (n < lambda.length()) throw DomainError("schur_bialternant: fewer letters than parts");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (letters[static_cast<size_t>(i)].mono == letters[static_cast<size_t>(j)].mono &&
                letters[static_cast<size_t>(i)].coef == letters[static_cast<size_t>(j)].coef) {
                throw DomainError("schur_bialternant: repeated letter");
            }
        }
    }
    if (n == 0) return LaurentPoly::constant(vars, ScalarQ(1));

    // Alternant by the Leibniz expansion: entries are single terms.
    std::vector<int> exps(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) exps[static_cast<size_t>(j - 1)] = lambda.part(j) + n - j;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<LaurentPoly::Term> alt_terms;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)];
        }
        Monomial m(vars->size());
        ScalarQ c(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) {
            const auto& z = letters[static_cast<size_t>(i)];
            const int e = exps[static_cast<size_t>(perm[static_cast<size_t>(i)])];
            m = m * z.mono.pow(e);
            for (int k = 0; k < e; ++k) c *= z.coef;
        }
        alt_terms.push_back({m, std::move(c)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    LaurentPoly result = LaurentPoly::from_terms(vars, std::move(alt_terms));

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            result = divide_by_difference(result, letters[static_cast<size_t>(i)], letters[static_cast<size_t>(j)]);
        }
    }
    return result;
}

}  // namespace qdyson
