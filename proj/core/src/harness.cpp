#include "qdyson/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "qdyson/errors.hpp"
#include "qdyson/identities.hpp"
#include "qdyson/splitting.hpp"

namespace qdyson {

using ojson = nlohmann::ordered_json;

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::mismatch: return "mismatch";
        case Status::skipped: return "skipped";
        case Status::error: return "error";
    }
    return "error";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::recursion: return "recursion";
        case Method::both: return "both";
        case Method::identity: return "identity";
    }
    return "both";
}

Method parse_method(std::string_view text) {
    if (text == "brute") return Method::brute;
    if (text == "recursion") return Method::recursion;
    if (text == "both") return Method::both;
    if (text == "identity") return Method::identity;
    throw DomainError("unknown method: " + std::string(text));
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "latex") return Format::latex;
    throw DomainError("unknown output format: " + std::string(text));
}

Policy parse_policy(std::string_view text) {
    if (text == "strict") return Policy::strict;
    if (text == "fallback") return Policy::fallback;
    throw DomainError("unknown policy: " + std::string(text));
}

// ---------------------------------------------------------------- emit

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_qpoly(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = 0; d <= p.degree(); ++d) {
        const Integer c = p.coeff(d);
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Integer mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (d == 0 || !mag.is_one()) out += mag.to_string();
        if (d == 1) out += "q";
        if (d > 1) out += "q^{" + std::to_string(d) + "}";
    }
    return out;
}

std::string latex_value(const std::string& text) {
    try {
        const ScalarQ v = ScalarQ::parse(text);
        if (v.is_polynomial()) return "$" + latex_qpoly(v.num()) + "$";
        return "$\\frac{" + latex_qpoly(v.num()) + "}{" + latex_qpoly(v.den()) + "}$";
    } catch (const Error&) {
        return "\\texttt{" + text + "}";
    }
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
        out += c;
    }
    return out;
}

std::string latex_seq(const ojson& arr) {
    std::string s = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(arr[i].get<int>());
    }
    return s + ")";
}

std::string latex_instance(const Report& r) {
    ojson p = ojson::parse(r.params, nullptr, false);
    if (p.is_object() && p.contains("a") && p.contains("v") && p.contains("lambda")) {
        return "$a=" + latex_seq(p["a"]) + ",\\ n_0=" + std::to_string(p.value("n0", 0)) + ",\\ v=" + latex_seq(p["v"]) +
               ",\\ \\lambda=" + latex_seq(p["lambda"]) + "$";
    }
    return latex_escape(r.key);
}

}  // namespace

std::string emit(std::span<const Report> reports, Format format) {
    switch (format) {
        case Format::json: {
            ojson out = ojson::array();
            for (const auto& r : reports) {
                ojson j;
                j["task"] = r.task;
                j["params"] = r.params.empty() ? ojson::object() : ojson::parse(r.params);
                j["method"] = to_string(r.method);
                j["status"] = to_string(r.status);
                if (r.value) j["value"] = *r.value;
                if (r.expected) j["expected"] = *r.expected;
                if (r.witness) j["witness"] = ojson::parse(*r.witness);
                if (r.trace) j["trace"] = ojson::parse(*r.trace);
                if (!r.detail.empty()) j["detail"] = r.detail;
                j["elapsedMs"] = r.elapsed_ms;
                out.push_back(std::move(j));
            }
            return reports.empty() ? "[]" : out.dump(2);
        }
        case Format::csv: {
            std::string out = "task,method,status,value,elapsed_ms\n";
            for (const auto& r : reports) {
                out += csv_field(r.task) + "," + to_string(r.method) + "," + to_string(r.status) + "," +
                       csv_field(r.value.value_or("")) + "," + std::to_string(r.elapsed_ms) + "\n";
            }
            return out;
        }
        case Format::latex: {
            std::string out = "\\begin{tabular}{lll}\n\\hline\ninstance & value & status \\\\\n\\hline\n";
            for (const auto& r : reports) {
                out += latex_instance(r) + " & " + (r.value ? latex_value(*r.value) : std::string("--")) + " & " +
                       to_string(r.status) + " \\\\\n";
            }
            return out + "\\hline\n\\end{tabular}\n";
        }
    }
    return {};
}

int exit_code(std::span<const Report> reports) {
    for (const auto& r : reports) {
        if (r.status == Status::mismatch || r.status == Status::error) return 1;
    }
    return 0;
}

void sort_reports(std::vector<Report>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const Report& x, const Report& y) {
        if (x.task != y.task) return x.task < y.task;
        if (x.key != y.key) return x.key < y.key;
        return x.method < y.method;
    });
}

// ---------------------------------------------------------------- generator

std::vector<DysonInstance> gen_instances(uint64_t seed, const GenBounds& bounds) {
    if (bounds.max_n < 1 || bounds.max_a < 1 || bounds.v_min > bounds.v_max || bounds.count < 0) {
        throw DomainError("gen_instances: malformed bounds");
    }
    std::mt19937_64 rng(seed);
    const auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    const int v_lo = bounds.require_composition ? std::max(bounds.v_min, 0) : bounds.v_min;
    const int v_hi = std::max(bounds.v_max, v_lo);

    std::vector<DysonInstance> out;
    for (int c = 0; c < bounds.count; ++c) {
        DysonInstance inst;
        const int n = pick(1, bounds.max_n);
        for (int i = 0; i < n; ++i) inst.a.push_back(pick(1, bounds.max_a));
        inst.n0 = pick(0, n);
        int total = -1;
        for (int attempt = 0; attempt < 64 && total < 0; ++attempt) {
            inst.v.clear();
            for (int i = 0; i < n; ++i) inst.v.push_back(pick(v_lo, v_hi));
            total = std::accumulate(inst.v.begin(), inst.v.end(), 0);
        }
        if (total < 0) {
            inst.v.assign(static_cast<size_t>(n), 0);
            total = 0;
        }
        std::vector<int> parts;
        for (int remaining = total; remaining > 0;) {
            const int p = pick(1, remaining);
            parts.push_back(p);
            remaining -= p;
        }
        inst.lambda = Partition::sorted_from(parts);
        out.push_back(std::move(inst));
    }
    return out;
}

// ---------------------------------------------------------------- grids

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string join(std::span<const int> xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

// All vectors of length n with entries in [lo, hi], in lexicographic order.
std::vector<std::vector<int>> box(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), lo);
    while (true) {
        out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == hi) {
            cur[static_cast<size_t>(k)] = lo;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
    }
    return out;
}

struct Unit {
    std::vector<int> a;
    int n0 = 0;
    int s = 0;

    [[nodiscard]] std::string key() const {
        std::string k = "a=" + join(a) + " n0=" + std::to_string(n0);
        if (s > 0) k += " s=" + std::to_string(s);
        return k;
    }
};

// (a, n0) groups with 1 <= n <= max_n, 1 <= a_i <= max_a, honoring the filters.
std::vector<Unit> groups(const GridOptions& o, int min_n, int max_n, int max_a, bool all_n0) {
    std::vector<Unit> out;
    for (int n = min_n; n <= max_n; ++n) {
        for (auto& a : box(n, 1, max_a)) {
            if (o.a && *o.a != a) continue;
            for (int n0 = 0; n0 <= (all_n0 ? n : 0); ++n0) {
                if (o.n0 && *o.n0 != n0) continue;
                out.push_back({a, n0, 0});
            }
        }
    }
    if (o.a && out.empty()) {
        for (int n0 = 0; n0 <= (all_n0 ? static_cast<int>(o.a->size()) : 0); ++n0) {
            if (o.n0 && *o.n0 != n0) continue;
            out.push_back({*o.a, n0, 0});
        }
    }
    return out;
}

constexpr size_t kCacheLimit = 48;

using UnitFn = std::function<void(const Unit&, OracleCache&, std::vector<Report>&)>;

std::vector<Report> run_units(const std::string& task, const std::vector<Unit>& units, int jobs, const UnitFn& fn) {
    std::vector<std::vector<Report>> results(units.size());
    std::atomic<size_t> next{0};
    const auto worker = [&]() {
        OracleCache cache;
        for (size_t k = next++; k < units.size(); k = next++) {
            const auto start = Clock::now();
            try {
                fn(units[k], cache, results[k]);
            } catch (const std::exception& e) {
                Report r;
                r.task = task;
                r.key = units[k].key();
                r.params = ojson{{"a", units[k].a}, {"n0", units[k].n0}}.dump();
                r.status = Status::error;
                r.detail = e.what();
                r.elapsed_ms = ms_since(start);
                results[k].push_back(std::move(r));
            }
            if (cache.size() > kCacheLimit) cache.clear();
        }
    };
    const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<size_t>(units.size(), 1)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    std::vector<Report> out;
    for (auto& rs : results) {
        for (auto& r : rs) out.push_back(std::move(r));
    }
    sort_reports(out);
    return out;
}

Report instance_report(const std::string& task, const DysonInstance& inst, Method method) {
    Report r;
    r.task = task;
    r.key = inst.key();
    r.params = instance_to_json(inst);
    r.method = method;
    return r;
}

void settle(Report& r, const ScalarQ& value, const ScalarQ& expected) {
    r.value = value.to_string();
    if (value == expected) {
        r.status = Status::verified;
    } else {
        r.status = Status::mismatch;
        r.expected = expected.to_string();
    }
}

// ---- q-Dyson

std::vector<Report> task_qdyson(const GridOptions& o, int max_n, int max_a) {
    return run_units("qdyson", groups(o, 1, max_n, max_a, false), o.jobs,
                     [](const Unit& u, OracleCache& cache, std::vector<Report>& out) {
                         const auto start = Clock::now();
                         DysonInstance inst{u.a, 0, std::vector<int>(u.a.size(), 0), {}};
                         Report r = instance_report("qdyson", inst, Method::identity);
                         settle(r, cache.get(u.a, 0).two_part_ct(), ScalarQ(qdyson_rhs(u.a)));
                         r.elapsed_ms = ms_since(start);
                         out.push_back(std::move(r));
                     });
}

// ---- Kadell

std::vector<Report> task_kadell(const GridOptions& o, int max_n, int max_a, int max_r) {
    return run_units("kadell", groups(o, 1, max_n, max_a, false), o.jobs,
                     [max_r](const Unit& u, OracleCache& cache, std::vector<Report>& out) {
                         DysonOracle& oracle = cache.get(u.a, 0);
                         const int n = static_cast<int>(u.a.size());
                         for (int r = 1; r <= max_r; ++r) {
                             for (int k = 1; k <= n; ++k) {
                                 const auto start = Clock::now();
                                 std::vector<int> v(static_cast<size_t>(n), 0);
                                 v[static_cast<size_t>(k - 1)] = r;
                                 DysonInstance inst{u.a, 0, v, Partition({r})};
                                 Report rep = instance_report("kadell", inst, Method::identity);
                                 settle(rep, oracle.d(v, inst.lambda), kadell_rhs(u.a, k, r));
                                 rep.elapsed_ms = ms_since(start);
                                 out.push_back(std::move(rep));
                             }
                             for (auto& v : box(n, 0, 3)) {
                                 if (std::accumulate(v.begin(), v.end(), 0) != r || single_spike(v)) continue;
                                 const auto start = Clock::now();
                                 DysonInstance inst{u.a, 0, v, Partition({r})};
                                 Report rep = instance_report("kadell", inst, Method::identity);
                                 settle(rep, oracle.d(v, inst.lambda), ScalarQ());
                                 rep.detail = "zero branch";
                                 rep.elapsed_ms = ms_since(start);
                                 out.push_back(std::move(rep));
                             }
                         }
                     });
}

// ---- vanishing

std::string witness_json(const VanishingWitness& w) {
    ojson subsets = ojson::array();
    for (const auto& e : w.per_subset) {
        subsets.push_back({{"I", e.subset}, {"p", e.p}, {"vSum", e.v_sum}, {"lambdaSum", e.lambda_sum}});
    }
    return ojson{{"j", w.j}, {"subsets", subsets}}.dump();
}

std::vector<Report> task_vanishing(const GridOptions& o, int max_n, int max_a) {
    return run_units("vanishing", groups(o, 1, max_n, max_a, true), o.jobs,
                     [](const Unit& u, OracleCache& cache, std::vector<Report>& out) {
                         DysonOracle& oracle = cache.get(u.a, u.n0);
                         const int n = static_cast<int>(u.a.size());
                         for (auto& v : box(n, -1, 3)) {
                             const int total = std::accumulate(v.begin(), v.end(), 0);
                             if (total < 0) continue;
                             for (const Partition& lambda : partitions_of(total, 4)) {
                                 if (lambda.part(1) > 4) continue;
                                 const auto start = Clock::now();
                                 const auto witness = vanishing_predicate(v, lambda, u.n0);
                                 const bool dominance = !dominated_by_sorted(lambda, v);
                                 if (!witness && !dominance) continue;
                                 DysonInstance inst{u.a, u.n0, v, lambda};
                                 Report rep = instance_report("vanishing", inst, Method::brute);
                                 const ScalarQ d = oracle.d(v, lambda);
                                 const ScalarQ ds = oracle.d_schur(v, lambda);
                                 rep.value = d.to_string();
                                 if (witness) rep.witness = witness_json(*witness);
                                 rep.detail = witness ? (dominance ? "witness; dominance" : "witness") : "dominance";
                                 if (d.is_zero() && ds.is_zero()) {
                                     rep.status = Status::verified;
                                 } else {
                                     rep.status = Status::mismatch;
                                     rep.expected = "0";
                                     rep.detail += "; schur value " + ds.to_string();
                                 }
                                 rep.elapsed_ms = ms_since(start);
                                 out.push_back(std::move(rep));
                             }
                         }
                     });
}

// ---- recursion

// Applies the single step whose preconditions hold and checks it against the
// oracle.  Returns nullopt if neither case applies.
std::optional<bool> step_sound(const DysonInstance& inst, OracleCache& cache, std::string& note) {
    const RecursionAnalysis an = analyze(inst);
    const ScalarQ parent = cache.get(inst.a, inst.n0).d(inst.v, inst.lambda);
    for (int which = 1; which <= 2; ++which) {
        if ((which == 1 ? an.S1 : an.S2).empty()) continue;
        try {
            const RecursionStep step = which == 1 ? step_case1(inst, an) : step_case2(inst, an);
            const ScalarQ sub = cache.get(step.sub.a, step.sub.n0).d(step.sub.v, step.sub.lambda);
            note = "step case " + std::to_string(which);
            return step.prefactor * sub == parent;
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

std::vector<Report> task_recursion(const GridOptions& o, int max_n, int max_a) {
    const bool with_trace = o.trace;
    return run_units("recursion", groups(o, 1, max_n, max_a, true), o.jobs,
                     [with_trace](const Unit& u, OracleCache& cache, std::vector<Report>& out) {
                         const int n = static_cast<int>(u.a.size());
                         for (auto& v : box(n, 0, 3)) {
                             const auto start = Clock::now();
                             DysonInstance inst{u.a, u.n0, v, Partition::sorted_from(v)};
                             Report rep = instance_report("recursion", inst, Method::both);
                             const CrossValidation cv = cross_validate(inst, cache);
                             std::string note;
                             const auto step = step_sound(inst, cache, note);
                             bool ok = cv.agree() && step.value_or(true);
                             if (u.n0 > 0 && u.n0 < n &&
                                 *std::min_element(v.begin() + u.n0, v.end()) <
                                     *std::max_element(v.begin(), v.begin() + u.n0)) {
                                 note += note.empty() ? "zero case" : "; zero case";
                                 ok = ok && cv.brute.is_zero();
                             }
                             rep.value = cv.brute.to_string();
                             if (!ok) {
                                 rep.status = Status::mismatch;
                                 rep.expected = cv.recursive.to_string();
                                 if (step && !*step) note += " failed";
                                 if (cv.kadell) note += "; closed form " + cv.kadell->to_string();
                             }
                             rep.detail = note;
                             if (with_trace) rep.trace = cv.trace.to_json();
                             rep.elapsed_ms = ms_since(start);
                             out.push_back(std::move(rep));
                         }
                     });
}

// ---- splitting

std::vector<Unit> splitting_units(const GridOptions& o, int max_n, int max_a) {
    std::vector<Unit> base;
    if (o.a) {
        base = groups(o, 1, static_cast<int>(o.a->size()), *std::max_element(o.a->begin(), o.a->end()), true);
    } else {
        base = groups(o, 1, std::min(max_n, 2), max_a, true);
        if (max_n >= 3) {
            for (auto& u : groups(o, 3, 3, std::min(max_a, 2), true)) base.push_back(u);
        }
    }
    std::vector<Unit> out;
    for (const auto& u : base) {
        for (int s = 1; s <= 2; ++s) {
            if (o.s && *o.s != s) continue;
            out.push_back({u.a, u.n0, s});
        }
    }
    return out;
}

std::vector<Report> task_splitting(const GridOptions& o, int max_n, int max_a) {
    return run_units("splitting", splitting_units(o, max_n, max_a), o.jobs,
                     [](const Unit& u, OracleCache&, std::vector<Report>& out) {
                         const auto start = Clock::now();
                         Report rep;
                         rep.task = "splitting";
                         rep.key = u.key();
                         rep.params = ojson{{"a", u.a}, {"n0", u.n0}, {"s", u.s}}.dump();
                         rep.method = Method::identity;
                         const int n = static_cast<int>(u.a.size());
                         int residues = 0;
                         int residues_ok = 0;
                         int degrees_ok = 0;
                         for (int i = 1; i <= n; ++i) {
                             for (int j = 0; j < truncated_exponent(u.a, u.n0, i); ++j) {
                                 ++residues;
                                 residues_ok += residue_check(u.a, u.n0, i, j, u.s) ? 1 : 0;
                                 degrees_ok += degree_claim_holds(u.a, u.n0, i, j, u.s) ? 1 : 0;
                             }
                         }
                         std::string split = "split";
                         bool ok = residues_ok == residues && degrees_ok == residues;
                         try {
                             const bool holds = verify_split(u.a, u.n0, u.s);
                             ok = ok && holds;
                             split += holds ? " holds" : " fails";
                             rep.status = ok ? Status::verified : Status::mismatch;
                         } catch (const DegenerateParameters& e) {
                             split += " skipped (" + std::string(e.what()) + ")";
                             rep.status = ok ? Status::skipped : Status::mismatch;
                         }
                         rep.detail = split + "; residues " + std::to_string(residues_ok) + "/" +
                                      std::to_string(residues) + "; degree claims " + std::to_string(degrees_ok) + "/" +
                                      std::to_string(residues);
                         rep.elapsed_ms = ms_since(start);
                         out.push_back(std::move(rep));
                     });
}

// ---- inductive formula

std::vector<Report> task_inductive(const GridOptions& o, int max_n, int max_a) {
    return run_units("inductive", groups(o, 2, max_n, max_a, true), o.jobs,
                     [](const Unit& u, OracleCache& cache, std::vector<Report>& out) {
                         const int n = static_cast<int>(u.a.size());
                         for (auto& v : box(n, 0, 3)) {
                             const int r = analyze(v, u.n0).r;
                             const int total = std::accumulate(v.begin(), v.end(), 0);
                             if (r < 1 || total < r) continue;
                             for (const Partition& tail : partitions_of(total - r, r)) {
                                 std::vector<int> parts{r};
                                 parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
                                 const auto start = Clock::now();
                                 DysonInstance inst{u.a, u.n0, v, Partition(parts)};
                                 Report rep = instance_report("inductive", inst, Method::identity);
                                 settle(rep, inductive_d(inst, cache), cache.get(u.a, u.n0).d(v, inst.lambda));
                                 rep.elapsed_ms = ms_since(start);
                                 out.push_back(std::move(rep));
                             }
                         }
                     });
}

// ---- auxiliary identities

Report identity_report(const std::string& key, const ojson& params, bool holds, int64_t ms) {
    Report r;
    r.task = "identities";
    r.key = key;
    r.params = params.dump();
    r.method = Method::identity;
    r.status = holds ? Status::verified : Status::mismatch;
    r.elapsed_ms = ms;
    return r;
}

std::vector<Report> task_identities(int max_esum, int max_m) {
    std::vector<Report> out;
    for (int n = 0; n <= max_esum; ++n) {
        for (int t = 0; t <= n; ++t) {
            const auto start = Clock::now();
            const bool holds = check_e_sum(n, t);
            out.push_back(identity_report("e_sum n=" + std::to_string(n) + " t=" + std::to_string(t),
                                          {{"identity", "e_sum"}, {"n", n}, {"t", t}}, holds, ms_since(start)));
        }
    }
    for (int m = 2; m <= max_m; ++m) {
        for (int size = 2; size <= 3; ++size) {
            for (const Subset& I : subsets_of_size(m, size)) {
                for (auto& a : box(m, 1, 2)) {
                    for (int r = 1; r <= 3; ++r) {
                        const auto start = Clock::now();
                        const ojson params{{"identity", "transsum"}, {"m", m}, {"I", I}, {"a", a}, {"r", r}};
                        const std::string key = "transsum m=" + std::to_string(m) + " I=" + join(I) + " a=" + join(a) +
                                                " r=" + std::to_string(r);
                        try {
                            const bool holds = check_transsum(m, I, a, r);
                            out.push_back(identity_report(key, params, holds, ms_since(start)));
                        } catch (const DegenerateParameters& e) {
                            Report rep = identity_report(key, params, true, ms_since(start));
                            rep.status = Status::skipped;
                            rep.detail = e.what();
                            out.push_back(std::move(rep));
                        }
                    }
                }
            }
        }
    }
    const std::pair<PochIdentity, std::string> kinds[] = {
        {PochIdentity::b1, "b1"}, {PochIdentity::b2, "b2"}, {PochIdentity::c, "c"}};
    for (const auto& [kind, name] : kinds) {
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; j <= 3; ++j) {
                const int lo = kind == PochIdentity::b2 ? -1 : 0;
                const int hi = kind == PochIdentity::b1 ? j : j - 1;
                for (int t = lo; t <= hi; ++t) {
                    const auto start = Clock::now();
                    const bool holds = verify_poch_lemma(i, j, t, kind);
                    out.push_back(identity_report(
                        "poch " + name + " i=" + std::to_string(i) + " j=" + std::to_string(j) + " t=" + std::to_string(t),
                        {{"identity", "poch_" + name}, {"i", i}, {"j", j}, {"t", t}}, holds, ms_since(start)));
                }
            }
        }
    }
    sort_reports(out);
    return out;
}

// ---- Schur

std::vector<Report> task_schur(const GridOptions& o, int max_n, int max_a) {
    std::vector<Report> out = run_units(
        "schur", groups(o, 1, max_n, max_a, true), o.jobs, [](const Unit& u, OracleCache& cache, std::vector<Report>& rs) {
            DysonOracle& oracle = cache.get(u.a, u.n0);
            for (auto& v : box(static_cast<int>(u.a.size()), 0, 3)) {
                const auto start = Clock::now();
                DysonInstance inst{u.a, u.n0, v, Partition::sorted_from(v)};
                Report rep = instance_report("schur", inst, Method::both);
                settle(rep, oracle.d_schur(v, inst.lambda), oracle.d(v, inst.lambda));
                rep.elapsed_ms = ms_since(start);
                rs.push_back(std::move(rep));
            }
        });
    // Jacobi-Trudi against the bialternant on alphabets of at most four letters.
    for (const Unit& u : groups(GridOptions{}, 1, 4, 4, true)) {
        const Alphabet alphabet = build_alphabet(u.a, u.n0);
        if (alphabet.size() > 4) continue;
        const Vars vars = dyson_vars(static_cast<int>(u.a.size()));
        const auto letters = alphabet_terms(alphabet, vars);
        for (int size = 0; size <= 4; ++size) {
            for (const Partition& lambda : partitions_of(size)) {
                if (lambda.length() > 3) continue;
                const auto start = Clock::now();
                const LaurentPoly jt = schur_jt(lambda, alphabet, vars);
                const bool holds = static_cast<int>(letters.size()) >= lambda.length()
                                       ? jt == schur_bialternant(lambda, letters, vars)
                                       : jt.is_zero();
                Report rep;
                rep.task = "schur";
                rep.key = "jt " + u.key() + " lambda=" + lambda.to_string();
                rep.params = ojson{{"a", u.a}, {"n0", u.n0}, {"lambda", lambda.parts()}}.dump();
                rep.method = Method::identity;
                rep.status = holds ? Status::verified : Status::mismatch;
                rep.detail = "jacobi-trudi vs bialternant";
                rep.elapsed_ms = ms_since(start);
                out.push_back(std::move(rep));
            }
        }
    }
    sort_reports(out);
    return out;
}

Report summarize(const std::string& task, const std::vector<Report>& items, int64_t ms) {
    Report r;
    r.task = task;
    r.key = task;
    r.params = ojson::object().dump();
    r.method = Method::identity;
    size_t verified = 0;
    size_t skipped = 0;
    const Report* first_bad = nullptr;
    for (const auto& it : items) {
        if (it.status == Status::verified) ++verified;
        if (it.status == Status::skipped) ++skipped;
        if ((it.status == Status::mismatch || it.status == Status::error) && !first_bad) first_bad = &it;
    }
    r.status = first_bad ? (first_bad->status == Status::error ? Status::error : Status::mismatch) : Status::verified;
    r.detail = std::to_string(verified) + " verified, " + std::to_string(skipped) + " skipped, " +
               std::to_string(items.size() - verified - skipped) + " failed";
    if (first_bad) r.detail += "; first failure: " + first_bad->key + " " + first_bad->detail;
    r.elapsed_ms = ms;
    return r;
}

}  // namespace

std::vector<std::string> task_names() {
    return {"qdyson", "kadell", "vanishing", "recursion", "splitting", "inductive", "identities", "schur"};
}

std::vector<Report> verify_task(std::string_view task, const GridOptions& o) {
    if (o.max_n < 1 || o.max_a < 1) throw DomainError("grid bounds must be positive");
    if (task == "qdyson") return task_qdyson(o, o.max_n, o.max_a);
    if (task == "kadell") return task_kadell(o, o.max_n, o.max_a, 3);
    if (task == "vanishing") return task_vanishing(o, o.max_n, o.max_a);
    if (task == "recursion") return task_recursion(o, o.max_n, o.max_a);
    if (task == "splitting") return task_splitting(o, o.max_n, o.max_a);
    if (task == "inductive") return task_inductive(o, o.max_n, o.max_a);
    if (task == "identities") return task_identities(8, 4);
    if (task == "schur") return task_schur(o, o.max_n, o.max_a);
    throw DomainError("unknown task: " + std::string(task));
}

std::vector<Report> run_suite(const GridOptions& options) {
    GridOptions o = options;
    o.a.reset();
    o.n0.reset();
    o.s.reset();
    o.trace = false;
    struct Entry {
        std::string task;
        std::function<std::vector<Report>()> run;
    };
    const std::vector<Entry> entries = {
        {"qdyson", [&] { return task_qdyson(o, 4, 3); }},
        {"kadell", [&] { return task_kadell(o, 3, 3, 3); }},
        {"vanishing", [&] { return task_vanishing(o, 4, 2); }},
        {"recursion", [&] { return task_recursion(o, 4, 3); }},
        {"splitting", [&] { return task_splitting(o, 3, 3); }},
        {"inductive", [&] { return task_inductive(o, 4, 3); }},
        {"identities", [&] { return task_identities(8, 4); }},
        {"schur", [&] { return task_schur(o, 4, 3); }},
    };
    std::vector<Report> out;
    for (const auto& e : entries) {
        const auto start = Clock::now();
        std::vector<Report> items = e.run();
        out.push_back(summarize(e.task, std::move(items), ms_since(start)));
    }
    sort_reports(out);
    return out;
}

Report compute_report(const DysonInstance& inst, Method method, Policy policy, bool with_trace) {
    const auto start = Clock::now();
    Report r = instance_report("compute", inst, method);
    try {
        inst.validate();
        OracleCache cache;
        const auto brute = [&] { return cache.get(inst.a, inst.n0).d(inst.v, inst.lambda); };
        switch (method) {
            case Method::brute:
                r.value = brute().to_string();
                r.status = Status::verified;
                break;
            case Method::recursion: {
                const RecursiveValue rv = d_recursive(inst, policy, cache);
                r.value = rv.value.to_string();
                r.status = Status::verified;
                if (with_trace) r.trace = rv.trace.to_json();
                break;
            }
            case Method::both: {
                const RecursiveValue rv = d_recursive(inst, policy, cache);
                settle(r, rv.value, brute());
                if (with_trace) r.trace = rv.trace.to_json();
                break;
            }
            case Method::identity: {
                std::optional<ScalarQ> closed;
                const int total = std::accumulate(inst.v.begin(), inst.v.end(), 0);
                const auto spike = single_spike(inst.v);
                if (inst.n0 == 0 && inst.lambda.empty() && total == 0 &&
                    std::all_of(inst.v.begin(), inst.v.end(), [](int x) { return x == 0; })) {
                    closed = ScalarQ(qdyson_rhs(inst.a));
                    r.detail = "q-Dyson product";
                } else if (inst.n0 == 0 && spike && inst.lambda == Partition({total})) {
                    closed = kadell_rhs(inst.a, *spike, total);
                    r.detail = "single-row closed form";
                } else if (total == inst.lambda.size()) {
                    if (auto w = vanishing_predicate(inst.v, inst.lambda, inst.n0)) {
                        closed = ScalarQ();
                        r.witness = witness_json(*w);
                        r.detail = "vanishing condition";
                    } else if (!dominated_by_sorted(inst.lambda, inst.v)) {
                        closed = ScalarQ();
                        r.detail = "lambda not dominated by v+";
                    }
                }
                if (closed) {
                    settle(r, *closed, brute());
                } else {
                    r.status = Status::skipped;
                    r.detail = "no closed form applies";
                }
                break;
            }
        }
    } catch (const std::exception& e) {
        r.status = Status::error;
        r.detail = e.what();
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

}  // namespace qdyson
