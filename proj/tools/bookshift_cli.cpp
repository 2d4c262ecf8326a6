// bookshift command-line front end. Talks to the library only through the C
// interface in bookshift/bookshift.h.

#include "bookshift/bookshift.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_parse = 2, exit_capacity = 3, exit_semantic = 4 };

int exit_code(bs_status status)
{
    switch (status) {
    case BS_OK:
        return exit_ok;
    case BS_ERR_PARSE:
    case BS_ERR_RANGE:
        return exit_parse;
    case BS_ERR_CAPACITY:
        return exit_capacity;
    case BS_ERR_SEMANTIC:
        return exit_semantic;
    default:
        return exit_failure;
    }
}

struct Failure {
    int code;
};

void check(bs_status status)
{
    if (status != BS_OK) {
        std::cerr << "error: " << bs_last_error() << "\n";
        throw Failure{exit_code(status)};
    }
}

struct StringDeleter {
    void operator()(char* s) const { bs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename Fn>
std::string take_string(Fn&& fn)
{
    char* raw = nullptr;
    check(fn(&raw));
    OwnedString owned(raw);
    return owned.get();
}

struct InstanceDeleter {
    void operator()(bs_instance* p) const { bs_instance_free(p); }
};
using InstancePtr = std::unique_ptr<bs_instance, InstanceDeleter>;

struct SolutionDeleter {
    void operator()(bs_solution* p) const { bs_solution_free(p); }
};
using SolutionPtr = std::unique_ptr<bs_solution, SolutionDeleter>;

InstancePtr load(const std::string& path)
{
    bs_instance* raw = nullptr;
    check(bs_instance_load(path.c_str(), &raw));
    return InstancePtr(raw);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        throw Failure{exit_failure};
    }
}

std::string join(const json& arr)
{
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty())
            out += ' ';
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// key=value lines; lists are space-separated.
void print_text(const json& doc, const std::vector<std::string>& keys)
{
    for (const auto& key : keys) {
        if (!doc.contains(key))
            continue;
        const json& v = doc[key];
        std::cout << key << "=" << (v.is_array() ? join(v) : scalar(v)) << "\n";
    }
}

bs_method parse_method(const std::string& name) { return name == "brute" ? BS_METHOD_BRUTE_FORCE : BS_METHOD_DP; }

struct SolveArgs {
    std::string path;
    std::string method = "dp";
    std::string dot_path;
    bool allow_large = false;
    unsigned threads = 1;
    bool as_json = false;
    bool timing = false;
};

SolutionPtr solve(const bs_instance* inst, const SolveArgs& args)
{
    bs_solution* raw = nullptr;
    check(bs_solve(inst, parse_method(args.method), args.allow_large ? 1 : 0, args.threads, &raw));
    return SolutionPtr(raw);
}

std::vector<size_t> parent_of(const bs_solution* sol)
{
    std::vector<size_t> p(bs_solution_parent(sol, nullptr, 0));
    bs_solution_parent(sol, p.data(), p.size());
    return p;
}

int run_solve(const SolveArgs& args)
{
    const auto start = std::chrono::steady_clock::now();
    InstancePtr inst = load(args.path);
    SolutionPtr sol = solve(inst.get(), args);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    json doc = json::parse(take_string([&](char** out) { return bs_solution_json(sol.get(), out); }));
    if (args.timing)
        doc["timing_ms"] = elapsed.count();
    if (!args.dot_path.empty()) {
        const auto p = parent_of(sol.get());
        write_file(args.dot_path,
                   take_string([&](char** out) { return bs_export_dot(inst.get(), p.data(), p.size(), out); }));
    }
    if (args.as_json)
        std::cout << doc.dump(2) << "\n";
    else
        print_text(doc, {"cost", "parent", "depth", "method", "nodes_explored", "timing_ms"});
    return exit_ok;
}

int run_count(size_t n, bool verify, bool as_json)
{
    const json doc =
        json::parse(take_string([&](char** out) { return bs_count(n, verify ? 1 : 0, out); }));
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "enumerated=" << (doc["enumerated"].is_null() ? "skipped" : doc["enumerated"].dump())
                  << " formula=" << doc["formula"].get<std::string>();
        if (!doc["recurrence"].is_null())
            std::cout << " recurrence=" << (doc["recurrence"].get<bool>() ? "ok" : "FAILED");
        std::cout << "\n";
    }
    if (!doc["recurrence"].is_null() && !doc["recurrence"].get<bool>())
        return exit_semantic;
    return exit_ok;
}

int run_validate(const std::string& path, bool as_json)
{
    InstancePtr inst = load(path);
    const json doc = json::parse(take_string([&](char** out) { return bs_validate(inst.get(), out); }));
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        print_text(doc, {"moves", "move_costs", "total", "parent", "depth", "tree_cost"});
    return exit_ok;
}

int run_mixing(const std::string& path, const std::string& kappa, const std::string& eps, bool assert_mixed,
               bool as_json)
{
    InstancePtr inst = load(path);
    const json doc = json::parse(take_string([&](char** out) {
        return bs_mixing(inst.get(), kappa.empty() ? nullptr : kappa.c_str(), eps.empty() ? nullptr : eps.c_str(),
                         out);
    }));
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        print_text(doc, {"mixed", "kappa", "eps", "scale", "mass", "mass_lower", "mass_upper", "mass_bounds_hold",
                         "lower_bound", "lower_bound_n"});
    if (assert_mixed && !doc["mixed"].get<bool>())
        return exit_semantic;
    return exit_ok;
}

int run_bench(const std::vector<size_t>& ks, const std::string& out_path)
{
    const std::string csv = take_string([&](char** out) { return bs_bench(ks.data(), ks.size(), out); });
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return exit_ok;
}

int run_export_dot(const SolveArgs& args, std::vector<size_t> parent, const std::string& out_path)
{
    InstancePtr inst = load(args.path);
    if (parent.empty()) {
        const long plan_len = bs_instance_plan(inst.get(), nullptr, 0);
        if (plan_len >= 0) {
            // Tree induced by the document's plan.
            const json doc =
                json::parse(take_string([&](char** out) { return bs_validate(inst.get(), out); }));
            parent = doc["parent"].get<std::vector<size_t>>();
        } else {
            parent = parent_of(solve(inst.get(), args).get());
        }
    }
    const std::string dot =
        take_string([&](char** out) { return bs_export_dot(inst.get(), parent.data(), parent.size(), out); });
    if (out_path.empty())
        std::cout << dot;
    else
        write_file(out_path, dot);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solver for the one-dimensional book-shifting (mixing) problem"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bs_version()));

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Minimize the sorting cost over admissible trees");
    solve_cmd->add_option("file", solve_args.path, "Instance, series or plan document")->required();
    solve_cmd->add_option("--method", solve_args.method, "dp or brute")
        ->check(CLI::IsMember({"dp", "brute"}))
        ->capture_default_str();
    solve_cmd->add_option("--export-dot", solve_args.dot_path, "Write the optimal transport graph as DOT");
    solve_cmd->add_flag("--allow-large", solve_args.allow_large, "Let brute force exceed N = 16");
    solve_cmd->add_option("--threads", solve_args.threads, "Brute-force worker threads")->capture_default_str();
    solve_cmd->add_flag("--json", solve_args.as_json, "Emit the result document as JSON");
    solve_cmd->add_flag("--timing", solve_args.timing, "Report wall-clock time (timing_ms)");

    size_t count_n = 0;
    bool verify_recurrence = false, count_json = false;
    auto* count_cmd = app.add_subcommand("count", "Count admissible parent functions on [N]");
    count_cmd->add_option("N", count_n, "Number of nodes")->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--verify-recurrence", verify_recurrence, "Check the Catalan convolution on enumerated counts");
    count_cmd->add_flag("--json", count_json, "Emit JSON");

    std::string validate_path;
    bool validate_json = false;
    auto* validate_cmd = app.add_subcommand("validate", "Replay a series plan and report per-move costs");
    validate_cmd->add_option("file", validate_path, "Series or plan document with a plan")->required();
    validate_cmd->add_flag("--json", validate_json, "Emit JSON");

    std::string mixing_path, kappa, eps;
    bool assert_mixed = false, mixing_json = false;
    auto* mixing_cmd = app.add_subcommand("mixing", "Check the geometric mixing scale of the normalized stack");
    mixing_cmd->add_option("file", mixing_path, "Instance or series document")->required();
    mixing_cmd->add_option("--kappa", kappa, "Mixing fraction, e.g. 1/3 (default: document value)");
    mixing_cmd->add_option("--eps", eps, "Window length on [0,1], e.g. 1/8 (default: document value)");
    mixing_cmd->add_flag("--assert-mixed", assert_mixed, "Exit with status 4 when not mixed");
    mixing_cmd->add_flag("--json", mixing_json, "Emit JSON");

    std::vector<size_t> bench_k{2, 4, 8, 16, 32, 64};
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Optimal cost of uniform alternating stacks versus log2 length");
    bench_cmd->add_option("--k", bench_k, "Comma-separated pair counts")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "CSV output path (default: stdout)");

    SolveArgs dot_args;
    std::vector<size_t> dot_parent;
    std::string dot_out;
    auto* dot_cmd = app.add_subcommand("export-dot", "Render a transport graph as Graphviz DOT");
    dot_cmd->add_option("file", dot_args.path, "Instance, series or plan document")->required();
    dot_cmd->add_option("--parent", dot_parent, "Comma-separated parent function (default: plan or optimum)")
        ->delimiter(',');
    dot_cmd->add_option("--method", dot_args.method, "Solver used when no tree is given")
        ->check(CLI::IsMember({"dp", "brute"}));
    dot_cmd->add_option("-o,--out", dot_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_args);
        if (*count_cmd)
            return run_count(count_n, verify_recurrence, count_json);
        if (*validate_cmd)
            return run_validate(validate_path, validate_json);
        if (*mixing_cmd)
            return run_mixing(mixing_path, kappa, eps, assert_mixed, mixing_json);
        if (*bench_cmd)
            return run_bench(bench_k, bench_out);
        if (*dot_cmd)
            return run_export_dot(dot_args, dot_parent, dot_out);
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_ok;
}
