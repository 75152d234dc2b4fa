#ifndef KEDGE_H
#define KEDGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum kedge_status {
  KEDGE_STATUS_OK = 0,
  KEDGE_STATUS_NULL_POINTER = 1,
  KEDGE_STATUS_INVALID_GRAPH = 2,
  KEDGE_STATUS_PARSE_ERROR = 3,
  KEDGE_STATUS_BUFFER_TOO_SMALL = 4,
  KEDGE_STATUS_NO_WITNESS = 5,
  KEDGE_STATUS_EDGELESS = 6,
  KEDGE_STATUS_INVALID_COLOURING = 7,
  KEDGE_STATUS_OUT_OF_RANGE = 8,
  KEDGE_STATUS_PANIC = 9,
} kedge_status;

// How `kedge_solve` reached its decision.
typedef enum kedge_shortcut {
  // The semi-core was built and solved.
  KEDGE_SHORTCUT_NONE = 0,
  // Δ < k: colourable without search.
  KEDGE_SHORTCUT_DELTA_BELOW_K = 1,
  // Δ > k: not colourable.
  KEDGE_SHORTCUT_DELTA_ABOVE_K = 2,
} kedge_shortcut;

// Opaque graph handle.
typedef struct kedge_graph kedge_graph;

// Opaque solve report handle.
typedef struct kedge_report kedge_report;

// Plain-data summary of a solve. Counts that do not apply are `SIZE_MAX`
// (or `UINT64_MAX` for `search_nodes`).
typedef struct kedge_report_info_t {
  size_t k;
  bool colourable;
  size_t delta;
  size_t core_size;
  size_t semi_core_size;
  size_t semi_core_edges;
  enum kedge_shortcut shortcut;
  uint64_t search_nodes;
  uint64_t decompose_ns;
  uint64_t semicore_ns;
  uint64_t extend_ns;
  uint64_t total_ns;
} kedge_report_info_t;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next failing call on this thread.
const char *kedge_last_error(void);

// Builds a graph on `n` vertices from `m` edges given as `2 * m` vertex ids
// `u0, v0, u1, v1, ...`. Edge ids of the result follow canonical order, not
// input order.
//
// # Safety
// `edges` must point to `2 * m` readable `size_t` values (may be NULL when
// `m == 0`); `out` must be a valid pointer.
enum kedge_status kedge_graph_new(size_t n,
                                  const size_t *edges,
                                  size_t m,
                                  struct kedge_graph **out);

// Parses the `p <n> <m>` / `e <u> <v>` text format.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum kedge_status kedge_graph_parse(const char *text, struct kedge_graph **out);

// # Safety
// `graph` must be NULL or a handle from this library not yet freed.
void kedge_graph_free(struct kedge_graph *graph);

// # Safety
// `graph` must be a live handle.
size_t kedge_graph_vertex_count(const struct kedge_graph *graph);

// # Safety
// `graph` must be a live handle.
size_t kedge_graph_edge_count(const struct kedge_graph *graph);

// # Safety
// `graph` must be a live handle.
size_t kedge_graph_max_degree(const struct kedge_graph *graph);

// Endpoints `u < v` of edge `e`.
//
// # Safety
// `graph` must be a live handle; `u` and `v` valid pointers.
enum kedge_status kedge_graph_edge(const struct kedge_graph *graph, size_t e, size_t *u, size_t *v);

// Serialises the graph; release the string with [`kedge_string_free`].
//
// # Safety
// `graph` must be a live handle; `out` a valid pointer.
enum kedge_status kedge_graph_write(const struct kedge_graph *graph, char **out);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void kedge_string_free(char *s);

// Decides `k`-edge colourability. The report is returned for both YES and
// NO; see [`kedge_report_info`].
//
// # Safety
// `graph` must be a live handle; `out` a valid pointer.
enum kedge_status kedge_solve(const struct kedge_graph *graph, size_t k, struct kedge_report **out);

// # Safety
// `report` must be NULL or a handle from [`kedge_solve`], not yet freed.
void kedge_report_free(struct kedge_report *report);

// # Safety
// `report` must be a live handle; `out` a valid pointer.
enum kedge_status kedge_report_info(const struct kedge_report *report,
                                    struct kedge_report_info_t *out);

// Copies the witness colouring, one colour per edge id, into `colours`.
// Fails with `KEDGE_STATUS_NO_WITNESS` on a NO report.
//
// # Safety
// `report` must be a live handle; `colours` must hold `len` writable values.
enum kedge_status kedge_report_witness(const struct kedge_report *report,
                                       uint32_t *colours,
                                       size_t len);

// Computes the chromatic index into `value`. When `colours` is non-NULL an
// optimal colouring is copied there as well.
//
// # Safety
// `graph` must be a live handle, `value` a valid pointer, and `colours`
// NULL or a buffer of `len` writable values.
enum kedge_status kedge_chromatic_index(const struct kedge_graph *graph,
                                        size_t *value,
                                        uint32_t *colours,
                                        size_t len);

// Checks that `colours` (one per edge id, `0` = uncoloured) is a complete
// proper colouring within `1..=k`. Returns `KEDGE_STATUS_INVALID_COLOURING`
// with the first violation in [`kedge_last_error`] otherwise.
//
// # Safety
// `graph` must be a live handle; `colours` must hold `len` readable values.
enum kedge_status kedge_verify(const struct kedge_graph *graph,
                               size_t k,
                               const uint32_t *colours,
                               size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KEDGE_H */
