#include "qdyson/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qdyson/errors.hpp"

namespace qdyson {

std::vector<Subset> subsets_of_size(int m, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > m) return out;
    Subset cur(static_cast<size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == m - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int t = i + 1; t < k; ++t) cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

std::vector<Subset> nonempty_subsets(const Subset& set) {
    std::vector<Subset> out;
    const size_t n = set.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Subset s;
        for (size_t b = 0; b < n; ++b) {
            if (mask & (1u << b)) s.push_back(set[b]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

QPoly qdyson_rhs(std::span<const int> a) {
    for (int ai : a) {
        if (ai < 0) throw DomainError("qdyson_rhs: a must be nonnegative");
    }
    const int total = std::accumulate(a.begin(), a.end(), 0);
    return q_multinomial(total, a);
}

ScalarQ kadell_rhs(std::span<const int> a, int k, int r) {
    const int n = static_cast<int>(a.size());
    if (k < 1 || k > n) throw DomainError("kadell_rhs: k must lie in 1..n");
    if (r < 1) throw DomainError("kadell_rhs: r must be positive");
    const int total = std::accumulate(a.begin(), a.end(), 0);
    const int ak = a[static_cast<size_t>(k - 1)];
    const int tail = std::accumulate(a.begin() + k, a.end(), 0);

    ScalarQ value = ScalarQ::q_power(tail) * ScalarQ(QPoly::one() - QPoly::monomial(Integer(1), ak));
    value *= poch_int(total + 1, r - 1);
    value /= poch_int(total - ak + 1, r);
    int suffix = total;
    for (int ai : a) {
        value *= ScalarQ(q_binomial(suffix, ai));
        suffix -= ai;
    }
    return value;
}

std::optional<VanishingWitness> vanishing_predicate(std::span<const int> v, const Partition& lambda, int n0) {
    const int n = static_cast<int>(v.size());
    if (n0 < 0 || n0 > n) throw DomainError("vanishing_predicate: n0 out of range");
    if (std::accumulate(v.begin(), v.end(), 0) != lambda.size()) {
        throw PreconditionError("|v| = |lambda|", "vanishing condition needs |v| = |lambda|");
    }
    for (int j = 1; j < n; ++j) {
        int lambda_sum = 0;
        for (int k = 1; k <= j; ++k) lambda_sum += lambda.part(k);
        VanishingWitness w{j, {}};
        bool holds = true;
        for (auto& I : subsets_of_size(n, j)) {
            int p = 0;
            int v_sum = 0;
            for (int i : I) {
                p += i <= n0 ? 1 : 0;
                v_sum += v[static_cast<size_t>(i - 1)];
            }
            if (v_sum - p * (n - n0 - j + p) >= lambda_sum) {
                holds = false;
                break;
            }
            w.per_subset.push_back({std::move(I), p, v_sum, lambda_sum});
        }
        if (holds) return w;
    }
    return std::nullopt;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
    const int len = std::max(mu.length(), nu.length());
    int sm = 0;
    int sn = 0;
    for (int i = 1; i <= len; ++i) {
        sm += mu.part(i);
        sn += nu.part(i);
        if (sm > sn) return false;
    }
    return true;
}

bool dominated_by_sorted(const Partition& lambda, std::span<const int> v) {
    std::vector<int> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const int len = std::max(lambda.length(), static_cast<int>(sorted.size()));
    int sl = 0;
    int sv = 0;
    for (int i = 1; i <= len; ++i) {
        sl += lambda.part(i);
        sv += i <= static_cast<int>(sorted.size()) ? sorted[static_cast<size_t>(i - 1)] : 0;
        if (sl > sv) return false;
    }
    return true;
}

int l_weight(int m, const Subset& I, const Subset& J, std::span<const int> a, int skip) {
    if (m < 0 || m > static_cast<int>(a.size())) throw DomainError("l_weight: m exceeds len(a)");
    for (int x : I) {
        if (x < 1 || x > m) throw DomainError("l_weight: index outside 1..m");
    }
    for (int x : J) {
        if (x < 1 || x > m) throw DomainError("l_weight: index outside 1..m");
    }
    int total = 0;
    for (int i : I) {
        for (int j = i; j <= m; ++j) {
            if (j == skip || std::find(J.begin(), J.end(), j) != J.end()) continue;
            total += a[static_cast<size_t>(j - 1)];
        }
    }
    return total;
}

bool check_e_sum(int n, int t) {
    if (t < 0 || t > n) throw DomainError("check_e_sum: need 0 <= t <= n");
    ScalarQ sum;
    for (int k = 0; k <= t; ++k) {
        ScalarQ den = poch_int(-k, k) * ScalarQ(q_factorial(t - k));
        sum += ScalarQ::q_power(k * (n - t)) / den;
    }
    return sum == ScalarQ(q_binomial(n, t));
}

namespace {

ScalarQ one_minus_q_power(int e) { return ScalarQ(1) - ScalarQ::q_power(e); }

ScalarQ checked_denominator(int e) {
    if (e == 0) throw DegenerateParameters("denominator 1 - q^0 vanishes");
    return one_minus_q_power(e);
}

int sum_over(const Subset& J, std::span<const int> a) {
    int s = 0;
    for (int j : J) s += a[static_cast<size_t>(j - 1)];
    return s;
}

}  // namespace

bool check_transsum(int m, const Subset& I, std::span<const int> a, int r) {
    if (I.size() < 2) throw DomainError("check_transsum: |I| must be at least 2");
    if (m > static_cast<int>(a.size())) throw DomainError("check_transsum: m exceeds len(a)");
    const int total = std::accumulate(a.begin(), a.end(), 0);

    ScalarQ lhs;
    for (int i : I) {
        const int ai = a[static_cast<size_t>(i - 1)];
        Subset rest;
        for (int x : I) {
            if (x != i) rest.push_back(x);
        }
        const int tail = std::accumulate(a.begin() + i, a.begin() + m, 0);
        for (const Subset& J : nonempty_subsets(rest)) {
            const int aJ = sum_over(J, a);
            ScalarQ term = ScalarQ::q_power(tail + l_weight(m, rest, J, a, i));
            term *= one_minus_q_power(ai) * one_minus_q_power(aJ);
            term /= checked_denominator(total - ai + r) * checked_denominator(total - ai - aJ + r);
            if (J.size() % 2 == 1) {
                lhs += term;
            } else {
                lhs -= term;
            }
        }
    }

    ScalarQ rhs;
    for (const Subset& J : nonempty_subsets(I)) {
        const int aJ = sum_over(J, a);
        ScalarQ term = ScalarQ::q_power(l_weight(m, I, J, a)) * one_minus_q_power(aJ) / checked_denominator(total - aJ + r);
        if (J.size() % 2 == 0) {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    return lhs == rhs;
}

}  // namespace qdyson
