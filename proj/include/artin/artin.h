/* C interface to the artin library: labelled graphs, poly-freeness and FJCw
 * certificates, certificate verification, word arithmetic in BS(n,n) and
 * <s,t | s^2 = t^(2k+1)>, and the random-graph corpus.
 *
 * Every function returns an artin_status. Strings handed out through
 * `char** out` are NUL-terminated, owned by the caller and released with
 * artin_string_free. After a failure artin_last_error() describes it. */
#ifndef ARTIN_ARTIN_H
#define ARTIN_ARTIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(ARTIN_BUILDING_LIBRARY)
#define ARTIN_API __attribute__((visibility("default")))
#else
#define ARTIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artin_status {
  ARTIN_OK = 0,
  ARTIN_UNKNOWN = 1,          /* no certificate found; not a negative claim */
  ARTIN_INPUT_ERROR = 2,      /* malformed text or violated precondition */
  ARTIN_REJECTED = 3,         /* certificate or check failed */
  ARTIN_INVALID_ARGUMENT = 4, /* null pointer or out-of-range enum */
  ARTIN_INTERNAL_ERROR = 5
} artin_status;

typedef enum artin_property { ARTIN_POLYFREE = 0, ARTIN_FJCW = 1 } artin_property;

typedef enum artin_group { ARTIN_GROUP_BS = 0, ARTIN_GROUP_DIHEDRAL = 1 } artin_group;

typedef enum artin_map { ARTIN_MAP_R = 0, ARTIN_MAP_CHI = 1 } artin_map;

typedef enum artin_family { ARTIN_FAMILY_ER = 0, ARTIN_FAMILY_TREE = 1 } artin_family;

typedef struct artin_graph artin_graph;
typedef struct artin_verdict artin_verdict;

ARTIN_API const char* artin_version(void);

/* Message for the last failing call on this thread; "" if none. Valid until
 * the next call on the same thread. */
ARTIN_API const char* artin_last_error(void);

ARTIN_API void artin_string_free(char* s);

/* Graph files: {"format":"artin-graph/1","vertices":[...],"edges":[[u,v,m],...]}. */
ARTIN_API artin_status artin_graph_parse(const char* text, artin_graph** out);
ARTIN_API void artin_graph_free(artin_graph* g);
ARTIN_API artin_status artin_graph_serialize(const artin_graph* g, char** out);
ARTIN_API artin_status artin_graph_hash(const artin_graph* g, char** out);
/* Even / FC / tree / join / clique report as text or JSON. */
ARTIN_API artin_status artin_graph_classify(const artin_graph* g, int json, char** out);

/* Always returns ARTIN_OK on success; inspect the verdict for the outcome. */
ARTIN_API artin_status artin_certify(const artin_graph* g, artin_property property, artin_verdict** out);
ARTIN_API void artin_verdict_free(artin_verdict* v);
ARTIN_API int artin_verdict_certified(const artin_verdict* v);
/* Poly-free length of a certified poly-free verdict, else -1. */
ARTIN_API int artin_verdict_length(const artin_verdict* v);
/* Certificate JSON when certified, else {"verdict":"Unknown","attempts":[...]}. */
ARTIN_API artin_status artin_verdict_json(const artin_verdict* v, char** out);
ARTIN_API artin_status artin_verdict_explain(const artin_verdict* v, char** out);

/* ARTIN_OK when accepted, ARTIN_REJECTED on rejection, hash mismatch or
 * schema violation, ARTIN_INPUT_ERROR when cert_text is not JSON. The
 * report (text or JSON) is produced for accepted and rejected
 * certificates; *failing_index (may be NULL) is the failing step or node,
 * or -1. */
ARTIN_API artin_status artin_verify(const char* cert_text, const artin_graph* g, int json, char** report,
                                    long* failing_index);

/* `param` is n for BS(n,n) and k for the odd dihedral group. Words are
 * space-separated `gen` or `gen^e` tokens over the group's generators
 * ({a,t} or {s,t}) or over the vertex generators {x,y}. */
ARTIN_API artin_status artin_word_nf(artin_group group, int param, const char* word, int json, char** out);
/* R gives "(p,q)", chi gives an integer. */
ARTIN_API artin_status artin_word_eval(artin_group group, int param, artin_map map, const char* word, int json,
                                       char** out);
/* ARTIN_OK when no nontrivial elliptic kernel element was sampled,
 * ARTIN_REJECTED otherwise. */
ARTIN_API artin_status artin_kernel_check(artin_group group, int param, artin_map map, int samples, int max_len,
                                          uint64_t seed, int json, char** out);

/* CSV report over `count` random graphs. Wall times only when `timing`. */
ARTIN_API artin_status artin_corpus(int count, int max_vertices, const int* labels, size_t n_labels, uint64_t seed,
                                    artin_family family, int timing, char** csv);

#ifdef __cplusplus
}
#endif

#endif
