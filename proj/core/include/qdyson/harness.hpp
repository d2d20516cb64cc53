#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdyson/ctengine.hpp"
#include "qdyson/recursion.hpp"

namespace qdyson {

enum class Status { verified, mismatch, skipped, error };
enum class Method { brute, recursion, both, identity };
enum class Format { json, csv, latex };

[[nodiscard]] std::string to_string(Status s);
[[nodiscard]] std::string to_string(Method m);
[[nodiscard]] Method parse_method(std::string_view text);
[[nodiscard]] Format parse_format(std::string_view text);
[[nodiscard]] Policy parse_policy(std::string_view text);

/// One checked item.  A mismatch carries both `value` and `expected`.
struct Report {
    std::string task;
    std::string key;     // sort key, usually DysonInstance::key()
    std::string params;  // JSON object text
    Method method = Method::both;
    Status status = Status::verified;
    std::optional<std::string> value;
    std::optional<std::string> expected;
    std::optional<std::string> witness;  // JSON text
    std::optional<std::string> trace;    // JSON text
    std::string detail;
    int64_t elapsed_ms = 0;
};

[[nodiscard]] std::string emit(std::span<const Report> reports, Format format);

/// 0 iff every report is verified or skipped.
[[nodiscard]] int exit_code(std::span<const Report> reports);

/// Stable order by (task, key, method).
void sort_reports(std::vector<Report>& reports);

struct GenBounds {
    int max_n = 3;
    int max_a = 3;
    int v_min = 0;
    int v_max = 3;
    bool require_composition = true;
    int count = 10;
};

/// Deterministic pseudo-random instances; lambda is a random partition of |v|
/// (empty if |v| <= 0 cannot be partitioned).
[[nodiscard]] std::vector<DysonInstance> gen_instances(uint64_t seed, const GenBounds& bounds);

struct GridOptions {
    int max_n = 3;
    int max_a = 3;
    int jobs = 1;
    uint64_t seed = 1;
    Policy policy = Policy::fallback;
    bool trace = false;
    std::optional<std::vector<int>> a;  // restrict the grid to this a
    std::optional<int> n0;              // and to this n0
    std::optional<int> s;               // splitting: number of w variables
};

[[nodiscard]] std::vector<std::string> task_names();

/// Per-item reports of one verification task, sorted.  Throws DomainError for
/// an unknown task.
[[nodiscard]] std::vector<Report> verify_task(std::string_view task, const GridOptions& options);

/// One summary report per task over the acceptance-size grids.
[[nodiscard]] std::vector<Report> run_suite(const GridOptions& options);

/// A single value by the chosen method(s).
[[nodiscard]] Report compute_report(const DysonInstance& inst, Method method, Policy policy, bool with_trace);

}  // namespace qdyson
