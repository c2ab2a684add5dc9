#ifndef BONDAGE_BONDAGE_H
#define BONDAGE_BONDAGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BDG_API __declspec(dllexport)
#else
#define BDG_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
    BDG_OK = 0,
    BDG_INPUT_ERROR = 2,
    BDG_PRECONDITION = 3,
    BDG_INTERNAL = 4
} bdg_status;

typedef struct bdg_graph bdg_graph;
typedef struct bdg_report bdg_report;

/* Message for the last failing call on this thread. */
BDG_API const char* bdg_last_error(void);

/* Graph documents: DIMACS-like text (with optional drawing, rotation,
   ports) or graph6. */
BDG_API bdg_status bdg_graph_parse(const char* text, bdg_graph** out);
BDG_API bdg_status bdg_graph_read_file(const char* path, bdg_graph** out);
BDG_API bdg_status bdg_graph_load_drawing(bdg_graph* g, const char* path);
BDG_API bdg_status bdg_graph_load_rotation(bdg_graph* g, const char* path);
BDG_API void bdg_graph_free(bdg_graph* g);
BDG_API int bdg_graph_n(const bdg_graph* g);
BDG_API int bdg_graph_m(const bdg_graph* g);
/* Caller frees the string with bdg_string_free. */
BDG_API bdg_status bdg_graph_serialize(const bdg_graph* g, char** text);
BDG_API void bdg_string_free(char* s);

/* Numeric queries. bdg_bondage sets *value to -1 when b(G) > d_max. */
BDG_API bdg_status bdg_gamma(const bdg_graph* g, int* value);
BDG_API bdg_status bdg_tau(const bdg_graph* g, int* value);
BDG_API bdg_status bdg_alpha(const bdg_graph* g, int* value);
BDG_API bdg_status bdg_bondage(const bdg_graph* g, int d_max, int threads, int* value);

/* Commands producing a text report. */
BDG_API bdg_status bdg_solve(const bdg_graph* g, const char* what, int max_d, int witness, int threads,
                             bdg_report** out);
BDG_API bdg_status bdg_cores(const bdg_graph* g, const char* what, bdg_report** out);
BDG_API bdg_status bdg_critical3(const bdg_graph* g, int pad_to_3, int verify, bdg_report** out);
/* kind: planarize-vc, bondage, claw-free, cubic, girth. The output graph
   is returned in *out_graph when out_graph is not NULL. */
BDG_API bdg_status bdg_reduce(const bdg_graph* g, const char* kind, int girth, int verify, int threads,
                              bdg_report** out, bdg_graph** out_graph);
BDG_API bdg_status bdg_verify_gadget(const char* path, int threads, bdg_report** out);
BDG_API bdg_status bdg_gadget_search(const char* contract, int max_n, int min_n, size_t limit, bdg_report** out);
BDG_API bdg_status bdg_poly_bondage(const bdg_graph* g, int d, const char* mode, bdg_report** out);

BDG_API const char* bdg_report_text(const bdg_report* r);
/* Trace of a reduction, empty for other commands. */
BDG_API const char* bdg_report_trace(const bdg_report* r);
/* Nonzero when a checked claim failed. */
BDG_API int bdg_report_failed(const bdg_report* r);
BDG_API void bdg_report_free(bdg_report* r);

#ifdef __cplusplus
}
#endif

#endif
