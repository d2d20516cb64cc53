#include "qdyson/splitting.hpp"

#include <numeric>

#include "qdyson/errors.hpp"
#include "qdyson/recursion.hpp"

namespace qdyson {

bool verify_poch_lemma(int i, int j, int t, PochIdentity which) {
    if (i < 0 || j < 0) throw DomainError("verify_poch_lemma: i, j must be nonnegative");
    const Vars vars = make_vars({"y"});
    const Monomial y{1};
    const Monomial inv_y{-1};
    const auto poch = [&](const Monomial& m, int shift, int k) { return poch_monomial(vars, m, k, shift); };
    const auto scalar = [&](ScalarQ c) { return LaurentPoly::constant(vars, std::move(c)); };

    LaurentPoly lhs(vars);
    LaurentPoly rhs(vars);
    switch (which) {
        case PochIdentity::b1:
            if (t < 0 || t > j) throw DomainError("verify_poch_lemma: b1 needs 0 <= t <= j");
            lhs = poch(inv_y, 0, i) * poch(y, 1, j);
            rhs = scalar(ScalarQ::q_power(i * t)) * poch(y, 1 - i, t) * poch(y, t + 1, j - t) * poch(inv_y, -t, i);
            break;
        case PochIdentity::b2:
            if (t < -1 || t > j - 1) throw DomainError("verify_poch_lemma: b2 needs -1 <= t <= j-1");
            lhs = poch(y, 0, j) * poch(inv_y, 1, i);
            rhs = scalar(ScalarQ::q_power(i * (t + 1))) * poch(y, -i, t + 1) * poch(y, t + 1, j - t - 1) *
                  poch(inv_y, -t, i);
            break;
        case PochIdentity::c:
            if (t < 0 || t > j - 1) throw DomainError("verify_poch_lemma: c needs 0 <= t <= j-1");
            lhs = poch(y, 0, j) * poch(inv_y, 1, i);
            rhs = LaurentPoly::term(vars, y, -ScalarQ::q_power((i + 1) * t)) * poch(y, -i, t) *
                  poch(y, t + 1, j - t - 1) * poch(inv_y, -t, i + 1);
            break;
    }
    return lhs == rhs;
}

Vars split_vars(int n, int s) { return drop_var(dyson_vars(n, s), n); }

namespace {

void check_block(std::span<const int> a, int n0, int i, int j, int s, bool first) {
    DysonInstance{std::vector<int>(a.begin(), a.end()), n0, std::vector<int>(a.size(), 0), {}}.validate();
    const int n = static_cast<int>(a.size());
    if (s < 1) throw DomainError("split: s must be at least 1");
    if (first) {
        if (i < 1 || i > n0) throw DomainError("A_ij: i must lie in 1..n0");
        if (j < 0 || j > a[static_cast<size_t>(i - 1)] - 2) throw DomainError("A_ij: j must lie in 0..a_i-2");
    } else {
        if (i <= n0 || i > n) throw DomainError("B_ij: i must lie in n0+1..n");
        if (j < 0 || j > a[static_cast<size_t>(i - 1)] - 1) throw DomainError("B_ij: j must lie in 0..a_i-1");
    }
}

// Monomial x_i / x_l over `vars` (1-based i, l; x_k at index k-1).
Monomial ratio(const Vars& vars, int i, int l) {
    Monomial m(vars->size());
    m[i - 1] = 1;
    m[l - 1] = -1;
    return m;
}

// F_{n-1, n0'}(a^{(i)}; x^{(i)}, w^{(1)}) times the w_2..w_s factors of x_i, over split_vars.
FactoredRational reduced_F(std::span<const int> a, int n0, int i, int s, int xi_length) {
    const int n = static_cast<int>(a.size());
    const Vars vars = split_vars(n, s);
    std::vector<int> sub_a;
    std::vector<int> x_index;
    for (int l = 1; l <= n; ++l) {
        if (l == i) continue;
        sub_a.push_back(a[static_cast<size_t>(l - 1)]);
        x_index.push_back(l - 1);
    }
    std::vector<int> w_index;
    for (int t = 2; t <= s; ++t) w_index.push_back(n + t - 2);
    const int sub_n0 = i <= n0 ? n0 - 1 : n0;
    FactoredRational f = build_F(sub_a, sub_n0, vars, x_index, w_index);

    std::vector<LinearFactor> dens;
    for (int w : w_index) {
        Monomial m(vars->size());
        m[i - 1] = 1;
        m[w] = -1;
        for (int u = 0; u < xi_length; ++u) dens.push_back({u, m});
    }
    f *= FactoredRational(ScalarQ(1), LaurentPoly::constant(vars, ScalarQ(1)), std::move(dens));
    return f;
}

int sum_range(std::span<const int> a, int from, int to, int offset) {
    int s = 0;
    for (int l = from; l <= to; ++l) s += a[static_cast<size_t>(l - 1)] + offset;
    return s;
}

}  // namespace

FactoredRational build_Aij(std::span<const int> a, int n0, int i, int j, int s) {
    check_block(a, n0, i, j, s, true);
    const int n = static_cast<int>(a.size());
    const int total = std::accumulate(a.begin(), a.end(), 0);
    const int ai = a[static_cast<size_t>(i - 1)];

    FactoredRational f = reduced_F(a, n0, i, s, ai - 1);
    const Vars& vars = f.vars();
    const int e = j * (total - ai - n0 + 1) + sum_range(a, i + 1, n0, -1);
    f *= ScalarQ::q_power(e) / (poch_int(-j, j) * ScalarQ(q_factorial(ai - j - 2)));

    LaurentPoly prod = LaurentPoly::constant(vars, ScalarQ(1));
    for (int l = 1; l < i; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= poch_monomial(vars, m, j, 2 - al) * poch_monomial(vars, m, ai - j - 1, j + 1);
    }
    for (int l = i + 1; l <= n0; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= poch_monomial(vars, m, j + 1, 1 - al) * poch_monomial(vars, m, ai - j - 2, j + 1);
    }
    for (int l = n0 + 1; l <= n; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= LaurentPoly::term(vars, m, ScalarQ(-1)) * poch_monomial(vars, m, j, 1 - al) *
                poch_monomial(vars, m, ai - j - 2, j + 1);
    }
    f *= prod;
    return f;
}

FactoredRational build_Bij(std::span<const int> a, int n0, int i, int j, int s) {
    check_block(a, n0, i, j, s, false);
    const int n = static_cast<int>(a.size());
    const int total = std::accumulate(a.begin(), a.end(), 0);
    const int ai = a[static_cast<size_t>(i - 1)];

    FactoredRational f = reduced_F(a, n0, i, s, ai);
    const Vars& vars = f.vars();
    const int e = j * (total - ai - n0) + sum_range(a, i + 1, n, 0);
    f *= ScalarQ::q_power(e) / (poch_int(-j, j) * ScalarQ(q_factorial(ai - j - 1)));

    LaurentPoly prod = LaurentPoly::constant(vars, ScalarQ(1));
    for (int l = 1; l <= n0; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= poch_monomial(vars, m, j, 2 - al) * poch_monomial(vars, m, ai - j - 1, j + 1);
    }
    for (int l = n0 + 1; l < i; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= poch_monomial(vars, m, j, 1 - al) * poch_monomial(vars, m, ai - j, j + 1);
    }
    for (int l = i + 1; l <= n; ++l) {
        const int al = a[static_cast<size_t>(l - 1)];
        const Monomial m = ratio(vars, i, l);
        prod *= poch_monomial(vars, m, j + 1, -al) * poch_monomial(vars, m, ai - j - 1, j + 1);
    }
    f *= prod;
    return f;
}

FactoredRational build_coefficient(std::span<const int> a, int n0, int i, int j, int s) {
    return i <= n0 ? build_Aij(a, n0, i, j, s) : build_Bij(a, n0, i, j, s);
}

FactoredRational residue_of_F(std::span<const int> a, int n0, int i, int j, int s) {
    const int n = static_cast<int>(a.size());
    if (i < 1 || i > n) throw DomainError("residue: i out of range");
    FactoredRational f = build_F(a, n0, s);
    Monomial pole(f.vars()->size());
    pole[i - 1] = 1;
    pole[n] = -1;
    f.remove_denominator({j, pole});
    Monomial target(f.vars()->size());
    target[i - 1] = 1;
    return f.substituted(n, j, target);
}

bool residue_check(std::span<const int> a, int n0, int i, int j, int s) {
    return equivalent(build_coefficient(a, n0, i, j, s), residue_of_F(a, n0, i, j, s));
}

bool degree_claim_holds(std::span<const int> a, int n0, int i, int j, int s) {
    const FactoredRational f = build_coefficient(a, n0, i, j, s);
    const int bound = i <= n0 ? static_cast<int>(a.size()) - n0 : 0;
    for (const auto& d : f.denominators()) {
        // Only (1 - q^u x_i / w_t) may involve x_i; these are power series in x_i from degree 0.
        if (d.mono[i - 1] < 0) return false;
    }
    return f.numerator().is_zero() || lowest_degree_in(f.numerator(), i - 1) >= bound;
}

bool verify_split(std::span<const int> a, int n0, int s, const SplitBounds& bounds) {
    const int n = static_cast<int>(a.size());
    if (n > bounds.max_n || s > bounds.max_s) throw DomainError("verify_split: size bounds exceeded");
    for (int ai : a) {
        if (ai > bounds.max_a) throw DomainError("verify_split: size bounds exceeded");
    }
    const FactoredRational f = build_F(a, n0, s);
    const Vars& full = f.vars();
    std::vector<int> index_map;
    for (int k = 0; k < full->size(); ++k) {
        if (k != n) index_map.push_back(k);
    }

    std::vector<FactoredRational> terms;
    for (int i = 1; i <= n; ++i) {
        const int len = truncated_exponent(a, n0, i);
        for (int j = 0; j < len; ++j) {
            FactoredRational t = build_coefficient(a, n0, i, j, s).embedded(full, index_map);
            Monomial pole(full->size());
            pole[i - 1] = 1;
            pole[n] = -1;
            t *= FactoredRational(ScalarQ(1), LaurentPoly::constant(full, ScalarQ(1)), {{j, pole}});
            terms.push_back(std::move(t));
        }
    }
    if (terms.empty()) throw DegenerateParameters("F has no pole in w1: every a_i - chi(i <= n0) is 0");
    return sum_equals(terms, f);
}

ScalarQ inductive_d(const DysonInstance& inst, OracleCache& cache) {
    inst.validate();
    const int n = inst.n();
    if (n < 2) throw PreconditionError("n >= 2", "inductive formula needs at least two variables");
    if (inst.lambda.empty()) throw PreconditionError("lambda nonempty", "inductive formula needs lambda_1 >= 1");
    const RecursionAnalysis an = analyze(inst);
    if (inst.lambda.part(1) != an.r) {
        throw PreconditionError("lambda_1 = r", "lambda_1 = " + std::to_string(inst.lambda.part(1)) +
                                                    ", r = " + std::to_string(an.r));
    }
    const int total = std::accumulate(inst.a.begin(), inst.a.end(), 0);
    const int top = total + an.r - 1 - inst.n0;
    const Partition rest = inst.lambda.drop_front(1);

    const auto remove = [](const std::vector<int>& xs, int i) {
        std::vector<int> out = xs;
        out.erase(out.begin() + (i - 1));
        return out;
    };

    ScalarQ value;
    for (int i : an.S1) {
        const int ai = inst.a[static_cast<size_t>(i - 1)];
        std::vector<int> shifted = inst.v;
        for (int l = inst.n0 + 1; l <= n; ++l) shifted[static_cast<size_t>(l - 1)] += 1;
        const std::vector<int> sub_a = remove(inst.a, i);
        ScalarQ term = ScalarQ::q_power(sum_range(inst.a, i + 1, inst.n0, -1)) * ScalarQ(q_binomial(top, ai - 2));
        if ((n - inst.n0) % 2 == 1) term = -term;
        value += term * cache.get(sub_a, inst.n0 - 1).d(remove(shifted, i), rest);
    }
    for (int i : an.S2) {
        const int ai = inst.a[static_cast<size_t>(i - 1)];
        const std::vector<int> sub_a = remove(inst.a, i);
        ScalarQ term = ScalarQ::q_power(sum_range(inst.a, i + 1, n, 0)) * ScalarQ(q_binomial(top, ai - 1));
        value += term * cache.get(sub_a, inst.n0).d(remove(inst.v, i), rest);
    }
    return value;
}

ScalarQ inductive_d(const DysonInstance& inst) {
    OracleCache cache;
    return inductive_d(inst, cache);
}

}  // namespace qdyson
