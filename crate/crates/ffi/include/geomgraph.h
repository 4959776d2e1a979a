#ifndef GEOMGRAPH_H
#define GEOMGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible call.
 */
typedef enum {
  GG_STATUS_OK = 0,
  GG_STATUS_INTERNAL_ERROR = 1,
  GG_STATUS_PARSE_ERROR = 2,
  GG_STATUS_VALIDATION_ERROR = 3,
  GG_STATUS_NULL_ARGUMENT = 4,
} GgStatus;

/**
 * Opaque handle to a loaded input: a geometric graph or an abstract
 * intersection matrix.
 */
typedef struct GgGraph GgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *gg_version(void);

/**
 * Parses a graph file (JSON) into a handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to a writable pointer slot.
 */
GgStatus gg_graph_from_json(const char *json, GgGraph **out);

/**
 * Releases a handle created by [`gg_graph_from_json`].
 *
 * # Safety
 * `g` must be a pointer previously returned by this library, not yet
 * freed; NULL is a no-op.
 */
void gg_graph_free(GgGraph *g);

/**
 * Releases a string returned by any `gg_*` call.
 *
 * # Safety
 * `s` must originate from this library and must not be freed twice; NULL
 * is a no-op.
 */
void gg_string_free(char *s);

/**
 * Serializes a geometric handle back to the JSON file format.
 *
 * # Safety
 * `g` must be a live handle; `out` a writable pointer slot.
 */
GgStatus gg_graph_to_json(const GgGraph *g, char **out);

/**
 * Runs a detector; the witness JSON lands in `out`.
 * Pattern grammar: `crossing-family:K,L | grid:K,L | pairwise-crossing:K |
 * disjoint-matching:K | circle3:{k3|empty|grid21|family21}`.
 *
 * # Safety
 * `g` must be a live handle; `pattern` a valid string; `out` writable.
 */
GgStatus gg_detect(const GgGraph *g, const char *pattern, uint64_t node_budget, char **out);

/**
 * Recursive decomposition; the partition tree JSON lands in `out`.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
GgStatus gg_decompose(const GgGraph *g, uint32_t leaf_size, char **out);

/**
 * Rotating halving line trace as JSON.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
GgStatus gg_halving_trace(const GgGraph *g, char **out);

/**
 * Ham-sandwich cut of two point classes given as
 * `{"v1": [[x,y],...], "v2": [[x,y],...]}`; the cut JSON lands in `out`.
 *
 * # Safety
 * `json` must be a valid string; `out` writable.
 */
GgStatus gg_ham_sandwich(const char *json, char **out);

/**
 * Good-endpoint report for a handle whose edges form a disjoint matching.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
GgStatus gg_good_endpoints(const GgGraph *g, char **out);

/**
 * Renders the graph as SVG; optionally detects `pattern` (may be NULL)
 * and highlights the witness.
 *
 * # Safety
 * `g` must be a live handle; `pattern` NULL or a valid string; `out`
 * writable.
 */
GgStatus gg_render_svg(const GgGraph *g, const char *pattern, uint64_t node_budget, char **out);

/**
 * Runs the extremal harness and returns the CSV. `n_list` is a
 * comma-separated list of point counts; `generator` is one of
 * `random-disk`, `convex`, `perturbed-grid`.
 *
 * # Safety
 * `pattern`, `n_list`, `generator` must be valid strings; `out` writable.
 */
GgStatus gg_extremal_csv(const char *pattern,
                         const char *n_list,
                         uint32_t trials,
                         uint64_t seed,
                         uint64_t node_budget,
                         const char *generator,
                         int64_t coordinate_scale,
                         char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GEOMGRAPH_H */
