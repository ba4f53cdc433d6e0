#ifndef CLUTTER_COMPLEXITY_H
#define CLUTTER_COMPLEXITY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_ARGUMENT = 2,
  CC_STATUS_PARSE_ERROR = 3,
  CC_STATUS_LIMIT_EXCEEDED = 4,
  CC_STATUS_PRECONDITION = 5,
  CC_STATUS_CERTIFICATE_FAILURE = 6,
  CC_STATUS_BUFFER_TOO_SMALL = 7,
  CC_STATUS_PANIC = 8,
} CcStatus;

// Opaque clutter handle.
typedef struct CcClutter CcClutter;

// Opaque graph handle.
typedef struct CcGraph CcGraph;

// Exact value `numer / denom`, always reduced.
typedef struct CcRational {
  uint64_t numer;
  uint64_t denom;
} CcRational;

// Outcome of one bound check. `holds` and `tight` are 1, 0, or -1 when
// undefined (inapplicable input or no left-hand side).
typedef struct CcBoundResult {
  bool applicable;
  bool has_lhs;
  struct CcRational lhs;
  int32_t holds;
  int32_t tight;
} CcBoundResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// successful call. Valid until the next call on the same thread.
const char *cc_last_error_message(void);

// # Safety
// `s` must come from this library or be NULL.
void cc_string_free(char *s);

// # Safety
// `code` must be a NUL-terminated string; `out` must be writable.
enum CcStatus cc_graph_from_graph6(const char *code, struct CcGraph **out);

// Graph on `n` vertices with `m` edges given as `2 * m` endpoints.
//
// # Safety
// `endpoints` must hold `2 * m` values (it may be NULL when `m` is 0).
enum CcStatus cc_graph_from_edges(size_t n,
                                  const size_t *endpoints,
                                  size_t m,
                                  struct CcGraph **out);

// # Safety
// `g` must come from a constructor of this library or be NULL.
void cc_graph_free(struct CcGraph *g);

// Vertex count, 0 for NULL.
//
// # Safety
// `g` must be a live handle or NULL.
size_t cc_graph_vertex_count(const struct CcGraph *g);

// Edge count, 0 for NULL.
//
// # Safety
// `g` must be a live handle or NULL.
size_t cc_graph_edge_count(const struct CcGraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum CcStatus cc_graph_to_graph6(const struct CcGraph *g, char **out);

// Complexity of the clutter of maximal independent sets.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CcStatus cc_graph_complexity(const struct CcGraph *g, struct CcRational *out);

// Complexity of the clutter of maximal matchings; fails on edgeless graphs.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CcStatus cc_matching_complexity(const struct CcGraph *g, struct CcRational *out);

// Clutter from text: the ground-set size, then one edge per line as vertex indices.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CcStatus cc_clutter_from_text(const char *text, struct CcClutter **out);

// The clutter of maximal independent sets of `g`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CcStatus cc_graph_independent_sets(const struct CcGraph *g, struct CcClutter **out);

// # Safety
// `l` must come from a constructor of this library or be NULL.
void cc_clutter_free(struct CcClutter *l);

// Number of edges, 0 for NULL.
//
// # Safety
// `l` must be a live handle or NULL.
size_t cc_clutter_edge_count(const struct CcClutter *l);

// Copies edge `index` into `out` (capacity `capacity`); `len` receives the
// edge size even when the buffer is too small.
//
// # Safety
// `l` must be a live handle; `out` must hold `capacity` values; `len` must be writable.
enum CcStatus cc_clutter_edge(const struct CcClutter *l,
                              size_t index,
                              size_t *out,
                              size_t capacity,
                              size_t *len);

// # Safety
// `l` must be a live handle; `out` must be writable.
enum CcStatus cc_clutter_complexity(const struct CcClutter *l, struct CcRational *out);

// Checks one bound (`"gallai"`, `"degree"`, `"main"`, `"matching_lower"`,
// `"regular_half"`, `"regular_two_thirds"`, `"regular_four"`, `"addendum"`).
//
// # Safety
// `g` must be a live handle, `kind` a NUL-terminated string, `out` writable.
enum CcStatus cc_check_bound(const struct CcGraph *g, const char *kind, struct CcBoundResult *out);

// Bound check on a clutter; only `"addendum"` can be applicable.
//
// # Safety
// `l` must be a live handle, `kind` a NUL-terminated string, `out` writable.
enum CcStatus cc_check_clutter_bound(const struct CcClutter *l,
                                     const char *kind,
                                     struct CcBoundResult *out);

// Maximal independent set of complexity one containing `leaf`, for trees
// with no beta and no pure delta vertex. `len` receives the set size.
//
// # Safety
// `g` must be a live handle; `out` must hold `capacity` values; `len` must be writable.
enum CcStatus cc_construct_tree_mis(const struct CcGraph *g,
                                    size_t leaf,
                                    size_t *out,
                                    size_t capacity,
                                    size_t *len);

// Full JSON report: statistics, both complexities, bounds and lemmas.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum CcStatus cc_full_report_json(const struct CcGraph *g, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUTTER_COMPLEXITY_H */
