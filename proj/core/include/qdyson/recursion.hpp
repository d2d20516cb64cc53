#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdyson/ctengine.hpp"
#include "qdyson/identities.hpp"

namespace qdyson {

/// r, the argmax sets S1 (indices <= n0) and S2 (indices > n0), the shifted
/// exponents a~ and the shift vector alpha of one recursion step.
struct RecursionAnalysis {
    int r = 0;
    Subset S1;
    Subset S2;
    std::optional<int> max_first;   // max{v_i - n + n0 : i <= n0}
    std::optional<int> max_second;  // max{v_i : i > n0}
    std::vector<int> a_tilde;       // (a_1-1, .., a_{n0}-1, a_{n0+1}, .., a_n); empty if a unknown
    std::vector<int> alpha;         // (0^{n0}, 1^{n-n0})

    [[nodiscard]] int s1() const noexcept { return static_cast<int>(S1.size()); }
    [[nodiscard]] int s2() const noexcept { return static_cast<int>(S2.size()); }
};

[[nodiscard]] RecursionAnalysis analyze(std::span<const int> v, int n0, std::span<const int> a = {});
[[nodiscard]] RecursionAnalysis analyze(const DysonInstance& inst);

struct RecursionStep {
    ScalarQ prefactor;
    DysonInstance sub;
};

/// Removes the first-block argmax set S1.  Throws PreconditionError naming the
/// failed hypothesis.
[[nodiscard]] RecursionStep step_case1(const DysonInstance& inst, const RecursionAnalysis& analysis);
/// Removes the second-block argmax set S2.
[[nodiscard]] RecursionStep step_case2(const DysonInstance& inst, const RecursionAnalysis& analysis);

enum class Policy { strict, fallback };

struct TraceStep {
    enum class Kind { case1, case2, base, zero, fallback };
    Kind kind;
    Subset removed;
    ScalarQ prefactor;
    DysonInstance remaining;
};

[[nodiscard]] std::string to_string(TraceStep::Kind kind);

/// The value is the product of all step prefactors; the last step is a base,
/// zero or fallback step whose prefactor is the terminal value.
struct EvalTrace {
    std::vector<TraceStep> steps;

    [[nodiscard]] ScalarQ product() const;
    [[nodiscard]] std::string to_json() const;
};

struct RecursiveValue {
    ScalarQ value;
    EvalTrace trace;
};

/// D_{v,v+}(a; n, n0) by removing argmax blocks until v = 0.
/// Under Policy::fallback an inapplicable instance is finished by brute force.
[[nodiscard]] RecursiveValue d_recursive(const DysonInstance& inst, Policy policy = Policy::strict);
[[nodiscard]] RecursiveValue d_recursive(const DysonInstance& inst, Policy policy, OracleCache& cache);

/// Position k (1-based) if v = r e_k with r >= 1.
[[nodiscard]] std::optional<int> single_spike(std::span<const int> v);

struct CrossValidation {
    ScalarQ brute;
    ScalarQ recursive;
    std::optional<ScalarQ> kadell;
    EvalTrace trace;

    [[nodiscard]] bool agree() const { return brute == recursive && (!kadell || *kadell == brute); }
};

[[nodiscard]] CrossValidation cross_validate(const DysonInstance& inst);
[[nodiscard]] CrossValidation cross_validate(const DysonInstance& inst, OracleCache& cache);

}  // namespace qdyson
