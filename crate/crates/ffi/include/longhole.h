#ifndef LONGHOLE_H
#define LONGHOLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes of the C interface.
 */
typedef enum LhStatus {
  LH_STATUS_OK = 0,
  /*
   A required pointer was null.
   */
  LH_STATUS_NULL_POINTER = 1,
  /*
   A parameter was out of range, such as `l` odd or below 6.
   */
  LH_STATUS_INVALID_ARGUMENT = 2,
  /*
   Input text could not be parsed.
   */
  LH_STATUS_PARSE_ERROR = 3,
  /*
   The edges do not describe a simple graph within capacity.
   */
  LH_STATUS_INVALID_GRAPH = 4,
  /*
   The deadline passed before an answer was found.
   */
  LH_STATUS_TIMEOUT = 5,
  /*
   An internal invariant failed.
   */
  LH_STATUS_INTERNAL = 6,
} LhStatus;

/*
 Which procedure answers a detection query.
 */
typedef enum LhEngine {
  LH_ENGINE_PIPELINE = 0,
  LH_ENGINE_ORACLE = 1,
} LhEngine;

/*
 An immutable simple graph.
 */
typedef struct LhGraph LhGraph;

/*
 The outcome of one detection query.
 */
typedef struct LhReport LhReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 The message of the last failure on this thread, or null. Valid until the next call into
 this library on the same thread.
 */
const char *lh_last_error(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *lh_version(void);

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
 (`2 * edge_count` entries). `edges` may be null when `edge_count` is 0.

 # Safety
 `edges` must point to `2 * edge_count` readable values and `out` must be writable.
 */
enum LhStatus lh_graph_new(size_t n, const size_t *edges, size_t edge_count, struct LhGraph **out);

/*
 Parses one graph6 record.

 # Safety
 `text` must be a NUL-terminated string and `out` must be writable.
 */
enum LhStatus lh_graph_from_graph6(const char *text, struct LhGraph **out);

/*
 Parses an edge list: one `u v` pair per line, `#` comments and blank lines ignored.

 # Safety
 `text` must be a NUL-terminated string and `out` must be writable.
 */
enum LhStatus lh_graph_from_edge_list(const char *text, struct LhGraph **out);

/*
 # Safety
 `graph` must be null or a handle from this library that has not been freed.
 */
void lh_graph_free(struct LhGraph *graph);

/*
 # Safety
 `graph` must be a live handle.
 */
size_t lh_graph_vertex_count(const struct LhGraph *graph);

/*
 # Safety
 `graph` must be a live handle.
 */
size_t lh_graph_edge_count(const struct LhGraph *graph);

/*
 Encodes the graph as graph6; release the string with `lh_string_free`.

 # Safety
 `graph` must be a live handle and `out` must be writable.
 */
enum LhStatus lh_graph_to_graph6(const struct LhGraph *graph, char **out);

/*
 Decides whether `graph` has an induced even cycle of length at least `ell` (even, at
 least 6). A `timeout_ms` of 0 means no limit; the oracle engine ignores it.

 # Safety
 `graph` must be a live handle and `out` must be writable.
 */
enum LhStatus lh_detect(const struct LhGraph *graph,
                        size_t ell,
                        enum LhEngine engine,
                        uint64_t timeout_ms,
                        struct LhReport **out);

/*
 # Safety
 `report` must be null or a handle from this library that has not been freed.
 */
void lh_report_free(struct LhReport *report);

/*
 True iff a long even hole was found.

 # Safety
 `report` must be a live handle.
 */
bool lh_report_found(const struct LhReport *report);

/*
 Name of the deciding stage as a static string, for example `"short-hole"` or `"none"`.

 # Safety
 `report` must be a live handle.
 */
const char *lh_report_stage(const struct LhReport *report);

/*
 Number of witness vertices; 0 when nothing was found.

 # Safety
 `report` must be a live handle.
 */
size_t lh_report_witness_len(const struct LhReport *report);

/*
 Copies up to `capacity` witness vertices, in cyclic order, into `buffer` and returns the
 full witness length.

 # Safety
 `report` must be a live handle and `buffer` must have room for `capacity` values.
 */
size_t lh_report_witness(const struct LhReport *report, size_t *buffer, size_t capacity);

/*
 Wall-clock time of the query in milliseconds.

 # Safety
 `report` must be a live handle.
 */
double lh_report_elapsed_ms(const struct LhReport *report);

/*
 The report as a JSON object; release the string with `lh_string_free`.

 # Safety
 `report` must be a live handle and `out` must be writable.
 */
enum LhStatus lh_report_to_json(const struct LhReport *report, char **out);

/*
 # Safety
 `s` must be null or a string returned by this library that has not been freed.
 */
void lh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LONGHOLE_H */
