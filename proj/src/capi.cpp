#include "bookshift/bookshift.h"

#include "bookshift/density.hpp"
#include "bookshift/error.hpp"
#include "bookshift/graphio.hpp"
#include "bookshift/instance_file.hpp"
#include "bookshift/solver.hpp"
#include "bookshift/trees.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

using namespace bookshift;
using json = nlohmann::ordered_json;

struct bs_instance {
    InstanceFile file;
};

struct bs_solution {
    Solution solution;
};

namespace {

thread_local std::string last_error;

bs_status status_of(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse:
        return BS_ERR_PARSE;
    case ErrorKind::capacity:
        return BS_ERR_CAPACITY;
    case ErrorKind::semantic:
        return BS_ERR_SEMANTIC;
    case ErrorKind::range:
        return BS_ERR_RANGE;
    case ErrorKind::io:
        return BS_ERR_IO;
    }
    return BS_ERR_INTERNAL;
}

template <typename Fn>
bs_status guarded(Fn&& fn)
{
    try {
        last_error.clear();
        fn();
        return BS_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return BS_ERR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return BS_ERR_INTERNAL;
}

void require(const void* ptr, const char* what)
{
    if (ptr == nullptr)
        throw std::invalid_argument(std::string(what) + " is null");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json rationals(const std::vector<Rational>& values)
{
    json arr = json::array();
    for (const auto& v : values)
        arr.push_back(to_string(v));
    return arr;
}

ParentFunction parent_from(const size_t* parent, size_t n)
{
    require(parent, "parent");
    return ParentFunction(std::vector<std::size_t>(parent, parent + n));
}

Rational param(const bs_instance* inst, const char* given, const char* name)
{
    if (given != nullptr)
        return parse_rational(given);
    const auto& opt = std::strcmp(name, "kappa") == 0 ? inst->file.kappa : inst->file.eps;
    if (!opt)
        fail(ErrorKind::parse, std::string("missing parameter '") + name + "'");
    return *opt;
}

} // namespace

extern "C" {

const char* bs_version(void) { return "1.0.0"; }

const char* bs_last_error(void) { return last_error.c_str(); }

void bs_string_free(char* s) { std::free(s); }

bs_status bs_instance_parse(const char* json_text, bs_instance** out)
{
    return guarded([&] {
        require(json_text, "json_text");
        require(out, "out");
        auto inst = std::make_unique<bs_instance>(bs_instance{parse_instance_file(json_text)});
        inst->file.instance().check();
        *out = inst.release();
    });
}

bs_status bs_instance_load(const char* path, bs_instance** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        auto inst = std::make_unique<bs_instance>(bs_instance{load_instance_file(path)});
        inst->file.instance().check();
        *out = inst.release();
    });
}

bs_status bs_instance_create(const char* const* a, size_t n, const char* const* b, bs_instance** out)
{
    return guarded([&] {
        require(out, "out");
        if (n == 0)
            fail(ErrorKind::semantic, "instance needs at least one node");
        require(a, "a");
        if (n > 1)
            require(b, "b");
        InstanceFile file;
        for (size_t i = 0; i < n; ++i)
            file.a.push_back(parse_rational(a[i]));
        for (size_t i = 0; i + 1 < n; ++i)
            file.b.push_back(parse_rational(b[i]));
        file.instance().check();
        *out = new bs_instance{std::move(file)};
    });
}

void bs_instance_free(bs_instance* inst) { delete inst; }

size_t bs_instance_size(const bs_instance* inst) { return inst ? inst->file.instance().size() : 0; }

const char* bs_instance_kind(const bs_instance* inst)
{
    return inst ? to_string(inst->file.kind).data() : "";
}

bs_status bs_instance_length(const bs_instance* inst, char** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        *out = dup(to_string(instance_length(inst->file.instance())));
    });
}

long bs_instance_plan(const bs_instance* inst, size_t* moves, size_t cap)
{
    if (inst == nullptr || !inst->file.plan)
        return -1;
    const auto& plan = *inst->file.plan;
    for (size_t i = 0; i < plan.size() && i < cap && moves != nullptr; ++i)
        moves[i] = plan[i];
    return static_cast<long>(plan.size());
}

bs_status bs_instance_param(const bs_instance* inst, const char* name, char** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(name, "name");
        require(out, "out");
        const std::optional<Rational>* opt = nullptr;
        if (std::strcmp(name, "kappa") == 0)
            opt = &inst->file.kappa;
        else if (std::strcmp(name, "eps") == 0)
            opt = &inst->file.eps;
        if (opt == nullptr || !*opt)
            fail(ErrorKind::semantic, std::string("document has no parameter '") + name + "'");
        *out = dup(to_string(**opt));
    });
}

bs_status bs_solve(const bs_instance* inst, bs_method method, int allow_large, unsigned threads, bs_solution** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        const Instance problem = inst->file.instance();
        Solution s = method == BS_METHOD_BRUTE_FORCE
                         ? solve_bruteforce(problem, BruteForceOptions{allow_large != 0, threads})
                         : solve_dp(problem);
        *out = new bs_solution{std::move(s)};
    });
}

void bs_solution_free(bs_solution* sol) { delete sol; }

bs_status bs_solution_cost(const bs_solution* sol, char** out)
{
    return guarded([&] {
        require(sol, "sol");
        require(out, "out");
        *out = dup(to_string(sol->solution.cost));
    });
}

size_t bs_solution_parent(const bs_solution* sol, size_t* out, size_t cap)
{
    if (sol == nullptr)
        return 0;
    const auto& p = sol->solution.p.values();
    for (size_t i = 0; i < p.size() && i < cap && out != nullptr; ++i)
        out[i] = p[i];
    return p.size();
}

size_t bs_solution_depth(const bs_solution* sol, size_t* out, size_t cap)
{
    if (sol == nullptr)
        return 0;
    const DepthVector d = generation(sol->solution.p);
    for (size_t i = 0; i < d.size() && i < cap && out != nullptr; ++i)
        out[i] = d[i];
    return d.size();
}

const char* bs_solution_method(const bs_solution* sol)
{
    return sol ? to_string(sol->solution.method).data() : "";
}

unsigned long long bs_solution_nodes_explored(const bs_solution* sol)
{
    return sol ? sol->solution.nodes_explored : 0;
}

bs_status bs_solution_json(const bs_solution* sol, char** out)
{
    return guarded([&] {
        require(sol, "sol");
        require(out, "out");
        const Solution& s = sol->solution;
        json doc;
        doc["N"] = s.p.size();
        doc["cost"] = to_string(s.cost);
        doc["parent"] = s.p.values();
        doc["depth"] = generation(s.p);
        doc["method"] = std::string(to_string(s.method));
        doc["nodes_explored"] = s.nodes_explored;
        *out = dup(doc.dump());
    });
}

int bs_is_admissible(const size_t* parent, size_t n)
{
    try {
        return is_admissible(parent_from(parent, n)) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

bs_status bs_tree_cost(const bs_instance* inst, const size_t* parent, size_t n, char** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        *out = dup(to_string(tree_cost(parent_from(parent, n), inst->file.instance())));
    });
}

bs_status bs_export_dot(const bs_instance* inst, const size_t* parent, size_t n, char** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        *out = dup(to_dot(build_graph(parent_from(parent, n), inst->file.instance())));
    });
}

bs_status bs_graph_json(const bs_instance* inst, const size_t* parent, size_t n, char** out)
{
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        const Instance problem = inst->file.instance();
        const TransportGraph g = build_graph(parent_from(parent, n), problem);
        json doc;
        doc["cost"] = to_string(graph_cost(g));
        doc["kirchhoff"] = kirchhoff_check(g, problem);
        doc["planar"] = is_planar_layering(g);
        json edges = json::array();
        for (const auto& e : g.edges)
            edges.push_back({{"source", e.source},
                             {"target", e.target},
                             {"weight", to_string(e.weight)},
                             {"length", to_string(e.length)}});
        doc["edges"] = std::move(edges);
        *out = dup(doc.dump());
    });
}

bs_status bs_count(size_t n, int verify_recurrence, char** out_json)
{
    constexpr size_t enumeration_limit = 14;
    return guarded([&] {
        require(out_json, "out_json");
        if (n == 0)
            fail(ErrorKind::range, "N must be at least 1");
        if (verify_recurrence && n > enumeration_limit)
            fail(ErrorKind::capacity, "recurrence check enumerates every N' <= N; N = " + std::to_string(n) +
                                          " exceeds " + std::to_string(enumeration_limit));
        json doc;
        doc["N"] = n;
        doc["formula"] = to_string(catalan(static_cast<unsigned long>(n - 1)));
        doc["enumerated"] = n <= enumeration_limit ? json(count_admissible(n)) : json(nullptr);
        doc["recurrence"] = nullptr;
        if (verify_recurrence) {
            // counts[m] = |P(m)|, checked against sum_{j=2}^{m} counts[j-1] * counts[m-j+1].
            std::vector<unsigned long long> counts(n + 1, 0);
            for (size_t m = 1; m <= n; ++m)
                counts[m] = count_admissible(m);
            bool ok = true;
            for (size_t m = 2; m <= n; ++m) {
                unsigned long long conv = 0;
                for (size_t j = 2; j <= m; ++j)
                    conv += counts[j - 1] * counts[m - j + 1];
                ok = ok && conv == counts[m];
            }
            doc["recurrence"] = ok;
            doc["sub_counts"] = std::vector<unsigned long long>(counts.begin() + 1, counts.end());
        }
        *out_json = dup(doc.dump());
    });
}

bs_status bs_catalan(unsigned long n, char** out)
{
    return guarded([&] {
        require(out, "out");
        *out = dup(to_string(catalan(n)));
    });
}

bs_status bs_validate(const bs_instance* inst, char** out_json)
{
    return guarded([&] {
        require(inst, "inst");
        require(out_json, "out_json");
        if (inst->file.kind == InstanceFile::Kind::instance)
            fail(ErrorKind::semantic, "validate needs a document of kind 'series' or 'plan'");
        if (!inst->file.plan)
            fail(ErrorKind::semantic, "document carries no plan");
        const SeriesPlan plan{inst->file.series(), *inst->file.plan};
        const ReplayTrace trace = replay_trace(plan);
        const ParentFunction p = plan_to_tree(plan);
        const Instance problem = inst->file.instance();
        const Rational total = plan.initial.total_length();

        json doc;
        doc["moves"] = plan.moves;
        doc["move_costs"] = rationals(trace.move_costs);
        doc["total"] = to_string(trace.total);
        doc["parent"] = p.values();
        doc["depth"] = generation(p);
        doc["tree_cost"] = to_string(tree_cost(p, problem));
        doc["graph_cost"] = to_string(graph_cost(build_graph(p, problem)));
        doc["density_cost"] = to_string(validate_plan(to_sorting_plan(plan)) * total);
        json states = json::array();
        for (const auto& s : trace.states)
            states.push_back(rationals(s.signed_terms()));
        doc["states"] = std::move(states);
        *out_json = dup(doc.dump());
    });
}

bs_status bs_mixing(const bs_instance* inst, const char* kappa_text, const char* eps_text, char** out_json)
{
    return guarded([&] {
        require(inst, "inst");
        require(out_json, "out_json");
        const Rational kappa = param(inst, kappa_text, "kappa");
        const Rational eps = param(inst, eps_text, "eps");
        if (kappa <= 0 || kappa > Rational(1, 2))
            fail(ErrorKind::range, "kappa = " + to_string(kappa) +
                                       " must lie in (0, 1/2]: for kappa > 1/2 the window band [kappa*eps, "
                                       "(1-kappa)*eps] is empty");
        if (eps <= 0 || eps > 1)
            fail(ErrorKind::range, "eps = " + to_string(eps) + " must lie in (0, 1]");

        const Instance problem = inst->file.instance();
        const BinaryDensity rho = instance_to_density(problem);
        const Rational m = total_mass(rho);
        const bool mixed = is_kappa_mixed(rho, kappa, eps);
        const MassBounds bounds = mass_bounds(kappa, eps);

        json doc;
        doc["mixed"] = mixed;
        doc["kappa"] = to_string(kappa);
        doc["eps"] = to_string(eps);
        doc["scale"] = to_string(instance_length(problem));
        doc["mass"] = to_string(m);
        doc["mass_lower"] = to_string(bounds.lower);
        doc["mass_upper"] = to_string(bounds.upper);
        doc["mass_bounds_hold"] = bounds.lower <= m && m <= bounds.upper;
        const Rational s = 1 - m;
        if (eps <= s) {
            const LowerBound lb = proof_lower_bound_detail(kappa, eps, s);
            doc["lower_bound"] = to_string(lb.value);
            doc["lower_bound_n"] = lb.argmax;
        } else {
            doc["lower_bound"] = nullptr;
            doc["lower_bound_n"] = nullptr;
        }
        *out_json = dup(doc.dump());
    });
}

bs_status bs_compare_bound(const bs_instance* inst, const char* kappa_text, const char* eps_text, char** out_json)
{
    return guarded([&] {
        require(inst, "inst");
        require(out_json, "out_json");
        const BoundReport r =
            compare_bound(inst->file.instance(), param(inst, kappa_text, "kappa"), param(inst, eps_text, "eps"));
        json doc;
        doc["optimal_cost"] = to_string(r.optimal_cost);
        doc["bound_value"] = to_string(r.bound_value);
        doc["kappa"] = to_string(r.kappa);
        doc["eps"] = to_string(r.eps);
        doc["s"] = to_string(r.s);
        doc["ratio"] = to_string(r.ratio);
        doc["scale"] = to_string(r.scale);
        doc["argmax_n"] = r.argmax;
        *out_json = dup(doc.dump());
    });
}

bs_status bs_bench(const size_t* k, size_t nk, char** out_csv)
{
    return guarded([&] {
        require(out_csv, "out_csv");
        if (nk > 0)
            require(k, "k");
        *out_csv = dup(scaling_csv(scaling_experiment(std::vector<std::size_t>(k, k + nk))));
    });
}

} // extern "C"
