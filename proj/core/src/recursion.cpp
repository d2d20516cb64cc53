#include "qdyson/recursion.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "qdyson/errors.hpp"

namespace qdyson {

RecursionAnalysis analyze(std::span<const int> v, int n0, std::span<const int> a) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw DomainError("analyze: n must be at least 1");
    if (n0 < 0 || n0 > n) throw DomainError("analyze: n0 out of range");
    if (!a.empty() && static_cast<int>(a.size()) != n) throw DomainError("analyze: len(a) != len(v)");
    RecursionAnalysis an;
    for (int i = 1; i <= n; ++i) {
        const int vi = v[static_cast<size_t>(i - 1)];
        auto& slot = i <= n0 ? an.max_first : an.max_second;
        const int value = i <= n0 ? vi - n + n0 : vi;
        slot = slot ? std::max(*slot, value) : value;
    }
    if (an.max_first && an.max_second) {
        an.r = std::max(*an.max_first, *an.max_second);
    } else {
        an.r = an.max_first ? *an.max_first : *an.max_second;
    }
    for (int i = 1; i <= n; ++i) {
        const int vi = v[static_cast<size_t>(i - 1)];
        if (i <= n0 && vi - n + n0 == an.r) an.S1.push_back(i);
        if (i > n0 && vi == an.r) an.S2.push_back(i);
    }
    an.alpha.assign(static_cast<size_t>(n), 0);
    for (int i = n0 + 1; i <= n; ++i) an.alpha[static_cast<size_t>(i - 1)] = 1;
    if (!a.empty()) {
        an.a_tilde.assign(a.begin(), a.end());
        for (int i = 1; i <= n0; ++i) an.a_tilde[static_cast<size_t>(i - 1)] -= 1;
    }
    return an;
}

RecursionAnalysis analyze(const DysonInstance& inst) {
    inst.validate();
    return analyze(inst.v, inst.n0, inst.a);
}

namespace {

std::vector<int> without(std::span<const int> xs, const Subset& S) {
    std::vector<int> out;
    for (int i = 1; i <= static_cast<int>(xs.size()); ++i) {
        if (std::find(S.begin(), S.end(), i) == S.end()) out.push_back(xs[static_cast<size_t>(i - 1)]);
    }
    return out;
}

int sum_over(const Subset& J, std::span<const int> a) {
    int s = 0;
    for (int j : J) s += a[static_cast<size_t>(j - 1)];
    return s;
}

void require(bool ok, const std::string& hypothesis, const std::string& detail) {
    if (!ok) throw PreconditionError(hypothesis, detail);
}

void require_lambda_head(const Partition& lambda, int count, int r) {
    for (int k = 1; k <= count; ++k) {
        require(lambda.part(k) == r, "lambda head mismatch",
                "need lambda_1 = ... = lambda_" + std::to_string(count) + " = " + std::to_string(r) + ", got " +
                    lambda.to_string());
    }
}

// qbinom(|a~|+r-1; a~, r-1) / qbinom(|a~|-a~_S+r-1; a~^{(S)}, r-1)
//   * sum_{J} (-1)^{|S-J|} q^{L_{m,S,J}(a~)} (1-q^{a~_J}) / (1-q^{|a~|-a~_J+r})
ScalarQ step_prefactor(const std::vector<int>& at, const Subset& S, int m, int r) {
    const int total = std::accumulate(at.begin(), at.end(), 0);
    const std::vector<int> rest = without(at, S);
    const int rest_total = std::accumulate(rest.begin(), rest.end(), 0);
    ScalarQ value = ScalarQ(q_multinomial(total + r - 1, at)) / ScalarQ(q_multinomial(rest_total + r - 1, rest));
    ScalarQ sum;
    for (const Subset& J : nonempty_subsets(S)) {
        const int aJ = sum_over(J, at);
        ScalarQ term = ScalarQ::q_power(l_weight(m, S, J, at)) * (ScalarQ(1) - ScalarQ::q_power(aJ)) /
                       (ScalarQ(1) - ScalarQ::q_power(total - aJ + r));
        if ((S.size() - J.size()) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return value * sum;
}

}  // namespace

RecursionStep step_case1(const DysonInstance& inst, const RecursionAnalysis& an) {
    inst.validate();
    const int n = inst.n();
    const int s1 = an.s1();
    require(s1 > 0 && an.max_first.has_value(), "S1 nonempty", "no first-block index attains r");
    require(an.r >= 1, "r >= 1", "r = " + std::to_string(an.r));
    require(!an.max_second || *an.max_first >= *an.max_second + s1, "first block dominates",
            "need max{v_i - n + n0 : i <= n0} >= max{v_i : i > n0} + s1");
    require(an.S2.empty(), "S2 empty", "second block also attains r");
    require_lambda_head(inst.lambda, s1, an.r);
    const auto at = an.a_tilde.empty() ? analyze(inst).a_tilde : an.a_tilde;

    ScalarQ prefactor = step_prefactor(at, an.S1, inst.n0, an.r);
    if ((s1 * (n - inst.n0)) % 2 == 1) prefactor = -prefactor;

    std::vector<int> shifted = inst.v;
    for (int i = inst.n0 + 1; i <= n; ++i) shifted[static_cast<size_t>(i - 1)] += s1;
    DysonInstance sub{without(inst.a, an.S1), inst.n0 - s1, without(shifted, an.S1), inst.lambda.drop_front(s1)};
    return {std::move(prefactor), std::move(sub)};
}

RecursionStep step_case2(const DysonInstance& inst, const RecursionAnalysis& an) {
    inst.validate();
    const int s2 = an.s2();
    require(s2 > 0 && an.max_second.has_value(), "S2 nonempty", "no second-block index attains r");
    require(an.r >= 1, "r >= 1", "r = " + std::to_string(an.r));
    require(!an.max_first || *an.max_second >= *an.max_first + s2, "second block dominates",
            "need max{v_i : i > n0} >= max{v_i - n + n0 : i <= n0} + s2");
    require(an.S1.empty(), "S1 empty", "first block also attains r");
    require_lambda_head(inst.lambda, s2, an.r);
    const auto at = an.a_tilde.empty() ? analyze(inst).a_tilde : an.a_tilde;

    ScalarQ prefactor = step_prefactor(at, an.S2, inst.n(), an.r);
    DysonInstance sub{without(inst.a, an.S2), inst.n0, without(inst.v, an.S2), inst.lambda.drop_front(s2)};
    return {std::move(prefactor), std::move(sub)};
}

std::string to_string(TraceStep::Kind kind) {
    switch (kind) {
        case TraceStep::Kind::case1: return "case1";
        case TraceStep::Kind::case2: return "case2";
        case TraceStep::Kind::base: return "base";
        case TraceStep::Kind::zero: return "zero";
        case TraceStep::Kind::fallback: return "fallback";
    }
    return "?";
}

ScalarQ EvalTrace::product() const {
    ScalarQ p(1);
    for (const auto& s : steps) p *= s.prefactor;
    return p;
}

std::string EvalTrace::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json step;
        step["case"] = to_string(s.kind);
        step["removed"] = s.removed;
        step["prefactor"] = s.prefactor.to_string();
        step["remaining"] = nlohmann::ordered_json::parse(instance_to_json(s.remaining));
        out.push_back(std::move(step));
    }
    return out.dump();
}

namespace {

ScalarQ base_value(const DysonInstance& inst, OracleCache& cache) {
    if (inst.n0 == 0) return ScalarQ(qdyson_rhs(inst.a));
    return cache.get(inst.a, inst.n0).two_part_ct();
}

// Why the recursive path does not apply, or nullopt if it does.
std::optional<std::string> recursion_obstacle(const DysonInstance& inst) {
    for (int vi : inst.v) {
        if (vi < 0) return "v has a negative entry";
    }
    if (!(Partition::sorted_from(inst.v) == inst.lambda)) return "lambda differs from v+";
    return std::nullopt;
}

}  // namespace

RecursiveValue d_recursive(const DysonInstance& inst, Policy policy, OracleCache& cache) {
    inst.validate();
    EvalTrace trace;
    DysonInstance cur = inst;
    const auto finish = [&](TraceStep::Kind kind, ScalarQ value) {
        trace.steps.push_back({kind, {}, std::move(value), cur});
        return RecursiveValue{trace.product(), std::move(trace)};
    };

    while (true) {
        if (auto obstacle = recursion_obstacle(cur)) {
            if (policy == Policy::strict) throw PreconditionError("lambda = v+ with v >= 0", *obstacle);
            return finish(TraceStep::Kind::fallback, cache.get(cur.a, cur.n0).d(cur.v, cur.lambda));
        }
        if (cur.lambda.empty()) return finish(TraceStep::Kind::base, base_value(cur, cache));

        const int n = cur.n();
        RecursionAnalysis an = analyze(cur);
        if (cur.n0 < n && cur.n0 > 0) {
            const int min_second = *std::min_element(cur.v.begin() + cur.n0, cur.v.end());
            const int max_first = *std::max_element(cur.v.begin(), cur.v.begin() + cur.n0);
            if (min_second < max_first) return finish(TraceStep::Kind::zero, ScalarQ());
        }
        try {
            const bool second = cur.n0 < n;
            RecursionStep step = second ? step_case2(cur, an) : step_case1(cur, an);
            trace.steps.push_back({second ? TraceStep::Kind::case2 : TraceStep::Kind::case1,
                                   second ? an.S2 : an.S1, std::move(step.prefactor), step.sub});
            cur = std::move(step.sub);
        } catch (const PreconditionError&) {
            if (policy == Policy::strict) throw;
            return finish(TraceStep::Kind::fallback, cache.get(cur.a, cur.n0).d(cur.v, cur.lambda));
        }
    }
}

RecursiveValue d_recursive(const DysonInstance& inst, Policy policy) {
    OracleCache cache;
    return d_recursive(inst, policy, cache);
}

std::optional<int> single_spike(std::span<const int> v) {
    std::optional<int> k;
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
        const int vi = v[static_cast<size_t>(i - 1)];
        if (vi == 0) continue;
        if (vi < 0 || k) return std::nullopt;
        k = i;
    }
    return k;
}

CrossValidation cross_validate(const DysonInstance& inst, OracleCache& cache) {
    inst.validate();
    CrossValidation cv;
    cv.brute = cache.get(inst.a, inst.n0).d(inst.v, inst.lambda);
    RecursiveValue rec = d_recursive(inst, Policy::fallback, cache);
    cv.recursive = std::move(rec.value);
    cv.trace = std::move(rec.trace);
    if (inst.n0 == 0) {
        if (auto k = single_spike(inst.v); k && inst.lambda == Partition({inst.v[static_cast<size_t>(*k - 1)]})) {
            cv.kadell = kadell_rhs(inst.a, *k, inst.v[static_cast<size_t>(*k - 1)]);
        }
    }
    return cv;
}

CrossValidation cross_validate(const DysonInstance& inst) {
    OracleCache cache;
    return cross_validate(inst, cache);
}

}  // namespace qdyson
