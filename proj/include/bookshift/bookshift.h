/*
 * bookshift.h - C interface to the bookshift library.
 *
 * Objects are opaque handles created by bs_*_load / bs_*_create / bs_solve and
 * released with the matching bs_*_free. Every fallible call returns a
 * bs_status; on failure bs_last_error() holds a message for the calling
 * thread. Strings returned through char** are heap-allocated and must be
 * released with bs_string_free. Node indices are 1-based throughout.
 *
 * Rationals cross the boundary as text: "p/q" in lowest terms, or "p".
 */
#ifndef BOOKSHIFT_H
#define BOOKSHIFT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BOOKSHIFT_BUILDING)
#    define BS_API __declspec(dllexport)
#  else
#    define BS_API __declspec(dllimport)
#  endif
#else
#  define BS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
    BS_OK = 0,
    BS_ERR_INTERNAL = 1,
    BS_ERR_PARSE = 2,    /* malformed document or value */
    BS_ERR_CAPACITY = 3, /* instance too large for the method */
    BS_ERR_SEMANTIC = 4, /* invalid plan, inadmissible tree, not mixed, ... */
    BS_ERR_RANGE = 5,    /* parameter outside its admissible range */
    BS_ERR_IO = 6,
    BS_ERR_ARGUMENT = 7  /* null handle or buffer */
} bs_status;

typedef enum bs_method {
    BS_METHOD_DP = 0,
    BS_METHOD_BRUTE_FORCE = 1
} bs_method;

typedef struct bs_instance bs_instance;
typedef struct bs_solution bs_solution;

BS_API const char* bs_version(void);
BS_API const char* bs_last_error(void);
BS_API void bs_string_free(char* s);

/* ---- instances ------------------------------------------------------- */

/* Parses a JSON instance document (kinds "instance", "series", "plan"). */
BS_API bs_status bs_instance_parse(const char* json_text, bs_instance** out);
BS_API bs_status bs_instance_load(const char* path, bs_instance** out);

/* Node/gap form: a has n entries, b has n-1. */
BS_API bs_status bs_instance_create(const char* const* a, size_t n, const char* const* b, bs_instance** out);
BS_API void bs_instance_free(bs_instance* inst);

/* Number of nodes N, including the sink. */
BS_API size_t bs_instance_size(const bs_instance* inst);
/* "instance", "series" or "plan". */
BS_API const char* bs_instance_kind(const bs_instance* inst);
/* Stack length used when normalizing to [0,1). */
BS_API bs_status bs_instance_length(const bs_instance* inst, char** out);
/* Copies up to cap moves, returns the plan length; -1 when the document has no plan. */
BS_API long bs_instance_plan(const bs_instance* inst, size_t* moves, size_t cap);
/* Optional document parameters "kappa" and "eps"; BS_ERR_SEMANTIC when absent. */
BS_API bs_status bs_instance_param(const bs_instance* inst, const char* name, char** out);

/* ---- solving --------------------------------------------------------- */

/* threads applies to brute force only; 0 or 1 scans serially. */
BS_API bs_status bs_solve(const bs_instance* inst, bs_method method, int allow_large, unsigned threads,
                          bs_solution** out);
BS_API void bs_solution_free(bs_solution* sol);
BS_API bs_status bs_solution_cost(const bs_solution* sol, char** out);
/* Copy up to cap entries; return N. */
BS_API size_t bs_solution_parent(const bs_solution* sol, size_t* out, size_t cap);
BS_API size_t bs_solution_depth(const bs_solution* sol, size_t* out, size_t cap);
BS_API const char* bs_solution_method(const bs_solution* sol);
BS_API unsigned long long bs_solution_nodes_explored(const bs_solution* sol);
/* {"N", "cost", "parent", "depth", "method", "nodes_explored"} */
BS_API bs_status bs_solution_json(const bs_solution* sol, char** out);

/* ---- trees and graphs ------------------------------------------------ */

BS_API int bs_is_admissible(const size_t* parent, size_t n);
BS_API bs_status bs_tree_cost(const bs_instance* inst, const size_t* parent, size_t n, char** out);
/* Builds the transport graph of the tree and renders it as Graphviz DOT. */
BS_API bs_status bs_export_dot(const bs_instance* inst, const size_t* parent, size_t n, char** out);
/* {"cost", "kirchhoff", "planar", "edges": [{"source","target","weight","length"}]} */
BS_API bs_status bs_graph_json(const bs_instance* inst, const size_t* parent, size_t n, char** out);

/* ---- reports (JSON text) --------------------------------------------- */

/* {"N", "formula", "enumerated" (null above 14), "recurrence" (null unless verified), "sub_counts"} */
BS_API bs_status bs_count(size_t n, int verify_recurrence, char** out_json);
BS_API bs_status bs_catalan(unsigned long n, char** out);

/* Replays the document's plan: {"moves", "move_costs", "total", "parent", "tree_cost", "states", ...} */
BS_API bs_status bs_validate(const bs_instance* inst, char** out_json);

/* kappa/eps may be NULL to use the document's values. Parameters refer to the
 * density normalized to unit length. */
BS_API bs_status bs_mixing(const bs_instance* inst, const char* kappa, const char* eps, char** out_json);
BS_API bs_status bs_compare_bound(const bs_instance* inst, const char* kappa, const char* eps, char** out_json);

/* Scaling experiment on uniform alternating stacks; CSV text. */
BS_API bs_status bs_bench(const size_t* k, size_t nk, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* BOOKSHIFT_H */
