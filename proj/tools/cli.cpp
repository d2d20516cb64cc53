#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdyson/errors.hpp"
#include "qdyson/harness.hpp"

namespace qdyson::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected a comma-separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

int default_jobs() {
    if (const char* env = std::getenv("QDYSON_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs > 0) return jobs;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constant-term computations for two-part q-Dyson products", "qdyson"};
    app.require_subcommand(1);

    std::string output = "json";
    std::string policy = "fallback";
    std::string method = "both";
    std::string a_text;
    std::string v_text;
    std::string lambda_text;
    std::string instance_path;
    int n0 = 0;
    int s = 0;
    bool trace = false;
    int max_n = 3;
    int max_a = 3;
    int jobs = default_jobs();
    uint64_t seed = 1;
    int count = 10;
    int v_min = 0;
    int v_max = 3;
    std::string task;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "csv", "latex"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "Compute one constant term");
    compute->add_option("--a", a_text, "Exponents a_1,..,a_n");
    compute->add_option("--n0", n0, "Size of the first block");
    compute->add_option("--v", v_text, "Exponent vector v (default all zero)");
    compute->add_option("--lambda", lambda_text, "Partition lambda (default empty)");
    compute->add_option("--s", s, "Number of w variables (accepted for completeness)");
    compute->add_option("--instance", instance_path, "Instance JSON file");
    compute->add_option("--method", method, "brute|recursion|both|identity")
        ->check(CLI::IsMember({"brute", "recursion", "both", "identity"}));
    compute->add_option("--policy", policy, "strict|fallback")->check(CLI::IsMember({"strict", "fallback"}));
    compute->add_flag("--trace", trace, "Include the recursion trace");
    add_output(compute);

    CLI::App* verify = app.add_subcommand("verify", "Check one identity family over a grid");
    verify->add_option("task", task, "Task name")->required()->check(CLI::IsMember(task_names()));
    verify->add_option("--max-n", max_n, "Largest n on the grid");
    verify->add_option("--max-a", max_a, "Largest a_i on the grid");
    verify->add_option("--a", a_text, "Restrict to this a");
    verify->add_option("--n0", n0, "Restrict to this n0");
    verify->add_option("--s", s, "Splitting: number of w variables");
    verify->add_option("--policy", policy, "strict|fallback")->check(CLI::IsMember({"strict", "fallback"}));
    verify->add_option("--seed", seed, "Seed");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--trace", trace, "Include recursion traces");
    add_output(verify);

    CLI::App* suite = app.add_subcommand("suite", "Run every identity family at full grid size");
    suite->add_option("--seed", seed, "Seed");
    suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_output(suite);

    CLI::App* gen = app.add_subcommand("gen", "Generate pseudo-random instances as JSON");
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--max-n", max_n, "Largest n");
    gen->add_option("--max-a", max_a, "Largest a_i");
    gen->add_option("--count", count, "Number of instances")->check(CLI::NonNegativeNumber);
    gen->add_option("--v-min", v_min, "Smallest entry of v");
    gen->add_option("--v-max", v_max, "Largest entry of v");
    bool allow_negative = false;
    gen->add_flag("--allow-negative", allow_negative, "Allow negative entries in v");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        const Format format = parse_format(output);
        std::vector<Report> reports;
        if (compute->parsed()) {
            DysonInstance inst;
            if (!instance_path.empty()) {
                try {
                    inst = instance_from_json(read_file(instance_path));
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            } else {
                if (a_text.empty()) throw UsageError("compute: --a or --instance is required");
                inst.a = parse_list(a_text, "--a");
                inst.n0 = n0;
                inst.v = v_text.empty() ? std::vector<int>(inst.a.size(), 0) : parse_list(v_text, "--v");
                try {
                    inst.lambda = Partition(parse_list(lambda_text, "--lambda"));
                    inst.validate();
                } catch (const DomainError& e) {
                    throw UsageError(e.what());
                }
            }
            reports.push_back(compute_report(inst, parse_method(method), parse_policy(policy), trace));
        } else if (verify->parsed()) {
            GridOptions o;
            o.max_n = max_n;
            o.max_a = max_a;
            o.jobs = jobs;
            o.seed = seed;
            o.policy = parse_policy(policy);
            o.trace = trace;
            if (!a_text.empty()) o.a = parse_list(a_text, "--a");
            if (verify->count("--n0") > 0) o.n0 = n0;
            if (verify->count("--s") > 0) o.s = s;
            if (o.max_n < 1 || o.max_a < 1) throw UsageError("--max-n and --max-a must be positive");
            reports = verify_task(task, o);
        } else if (suite->parsed()) {
            GridOptions o;
            o.jobs = jobs;
            o.seed = seed;
            reports = run_suite(o);
        } else if (gen->parsed()) {
            GenBounds b;
            b.max_n = max_n;
            b.max_a = max_a;
            b.v_min = v_min;
            b.v_max = v_max;
            b.require_composition = !allow_negative;
            b.count = count;
            if (b.max_n < 1 || b.max_a < 1 || b.v_min > b.v_max) throw UsageError("gen: malformed bounds");
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& inst : gen_instances(seed, b)) arr.push_back(nlohmann::ordered_json::parse(instance_to_json(inst)));
            out << arr.dump() << "\n";
            return 0;
        }
        out << emit(reports, format);
        if (format == Format::json) out << "\n";
        return exit_code(reports);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qdyson::cli
