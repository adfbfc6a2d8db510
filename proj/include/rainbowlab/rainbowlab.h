/* C interface to the rainbowlab engine.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rl_status; on failure rl_last_error()
 * describes the problem (per thread, valid until the next failing call).
 * Strings returned through char** are heap-allocated and released with
 * rl_string_free.
 */
#ifndef RAINBOWLAB_RAINBOWLAB_H
#define RAINBOWLAB_RAINBOWLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RAINBOWLAB_BUILDING)
#define RL_API __declspec(dllexport)
#else
#define RL_API __declspec(dllimport)
#endif
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_DOMAIN = 1,   /* input outside the operation's domain */
  RL_ERR_BUDGET = 2,   /* search node budget exhausted */
  RL_ERR_ARGUMENT = 3, /* null pointer or malformed argument */
  RL_ERR_BUFFER = 4,   /* caller buffer too small; required size reported */
  RL_ERR_INTERNAL = 5
} rl_status;

typedef enum rl_component_kind {
  RL_EXACTLY_TWO = 0,
  RL_EXACTLY_THREE = 1,
  RL_MORE_THAN_PREDICTED = 2,
  RL_OUT_OF_THEOREM_SCOPE = 3
} rl_component_kind;

typedef struct rl_digraph rl_digraph;
typedef struct rl_coloring rl_coloring;

typedef struct rl_search_options {
  uint64_t node_budget;
  unsigned threads;     /* 0: RAINBOWLAB_THREADS or hardware concurrency */
  unsigned split_depth; /* 0: automatic */
} rl_search_options;

RL_API const char* rl_version(void);
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* s);
RL_API void rl_search_options_default(rl_search_options* out);

/* arithmetic */
RL_API int rl_is_prime(uint64_t n);
RL_API rl_status rl_factorize(uint64_t n, uint64_t* primes, unsigned* exponents, size_t capacity, size_t* count);
RL_API rl_status rl_multiplicative_order(uint64_t a, uint64_t p, uint64_t* order);
RL_API rl_status rl_t_decomposition(uint64_t m, uint64_t k, uint64_t* t, uint64_t* w);
RL_API rl_status rl_support_condition(uint64_t p, uint64_t k, int* holds);
RL_API rl_status rl_frobenius_bound(uint64_t i, uint64_t j, int64_t* bound);
RL_API int rl_is_fermat_prime(uint64_t p);

/* power digraphs */
RL_API rl_status rl_digraph_build(uint64_t n, uint64_t k, rl_digraph** out);
RL_API void rl_digraph_free(rl_digraph* g);
RL_API uint64_t rl_digraph_order(const rl_digraph* g);
RL_API size_t rl_digraph_component_count(const rl_digraph* g);
RL_API size_t rl_digraph_cycle_vertex_count(const rl_digraph* g);
RL_API rl_status rl_digraph_successor(const rl_digraph* g, uint64_t a, uint64_t* out);
RL_API rl_status rl_digraph_component_of(const rl_digraph* g, uint64_t a, uint64_t* out);
RL_API rl_status rl_digraph_is_cycle_vertex(const rl_digraph* g, uint64_t a, int* out);
RL_API rl_status rl_digraph_dot(const rl_digraph* g, int cluster_components, char** out);
/* {"n","k","component_count","cycle_vertex_count","components","theorem"} */
RL_API rl_status rl_digraph_json(const rl_digraph* g, char** out);
RL_API rl_status rl_component_prediction(uint64_t p, uint64_t k, rl_component_kind* kind);

/* colorings of Z_n */
RL_API rl_status rl_coloring_create(const uint8_t* colors, size_t n, unsigned r, rl_coloring** out);
/* Accepts {"n":..,"k":..,"colors":[..]} (k ignored; r optional). */
RL_API rl_status rl_coloring_from_json(const char* json, rl_coloring** out);
RL_API void rl_coloring_free(rl_coloring* c);
RL_API size_t rl_coloring_size(const rl_coloring* c);
RL_API int rl_coloring_is_exact(const rl_coloring* c);
/* found = 1 and xyz filled when a rainbow solution of x - y = z^k exists. */
RL_API rl_status rl_coloring_find_rainbow(const rl_coloring* c, uint64_t k, int* found, uint64_t xyz[3]);
/* Structural report plus an independent rainbow scan, as JSON. Prime modulus only. */
RL_API rl_status rl_coloring_classify_json(const rl_coloring* c, uint64_t k, char** out);

/* rainbow numbers */
typedef struct rl_rb_summary {
  size_t rows;
  size_t agreements;
  size_t disagreements;
  size_t exceeded;
  size_t unpredicted; /* rows outside theorem scope */
} rl_rb_summary;

/* Runs rb for each modulus in [lo, hi] (only primes when primes_only) and each
 * k in [k_lo, k_hi]. Produces the JSON artifact and the CSV table. */
RL_API rl_status rl_rb_table(uint64_t lo, uint64_t hi, int primes_only, uint64_t k_lo, uint64_t k_hi,
                             unsigned max_r, const rl_search_options* options, char** json_out, char** csv_out,
                             rl_rb_summary* summary);
RL_API rl_status rl_rb_predicted(uint64_t p, uint64_t k, unsigned* value, int* in_scope);

/* All canonical rainbow-free exact r-colorings of Z_n as a JSON artifact. */
RL_API rl_status rl_enumerate_json(uint64_t n, uint64_t k, unsigned r, const rl_search_options* options,
                                   char** out, size_t* count);

/* prefix experiments */
typedef struct rl_density_config {
  uint64_t k;
  size_t N;
  size_t trials;
  uint64_t seed;
  double margin;
  unsigned threads;
} rl_density_config;

RL_API rl_status rl_density_experiment_json(const rl_density_config* config, char** out, size_t* exceptions);
/* Lifts a Z_n coloring to [1..N] and reports rainbow scan, dominance, runs
 * summary and densities as JSON; the density trace goes to csv_out. */
RL_API rl_status rl_prefix_analyze(const rl_coloring* c, uint64_t k, size_t N, char** json_out, char** csv_out);

/* invariant suite */
typedef struct rl_verify_config {
  uint64_t p_max;
  uint64_t k_max;
  size_t lift_length;
  size_t density_trials;
  uint64_t seed;
  int self_test_negative;
  rl_search_options search;
} rl_verify_config;

RL_API void rl_verify_config_default(rl_verify_config* out);
RL_API rl_status rl_verify_all_json(const rl_verify_config* config, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* RAINBOWLAB_RAINBOWLAB_H */
