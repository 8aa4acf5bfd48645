/* C interface to the octavia library. */
#ifndef OCTAVIA_H
#define OCTAVIA_H

#include <stdint.h>

#if defined(_WIN32)
#define OCTAVIA_API __declspec(dllexport)
#else
#define OCTAVIA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Return codes. */
typedef enum {
    OCTAVIA_OK = 0,
    OCTAVIA_ERR_INVALID_ARGUMENT = 1,
    OCTAVIA_ERR_DIMENSION_MISMATCH = 2,
    OCTAVIA_ERR_DOMAIN = 3,
    OCTAVIA_ERR_NOT_COPRIME = 4,
    OCTAVIA_ERR_SEARCH_FAILED = 5,
    OCTAVIA_ERR_OVERFLOW = 6,
    OCTAVIA_ERR_IO = 7,
    OCTAVIA_ERR_INTERNAL = 8
} octavia_status;

typedef struct octavia_elem octavia_elem;       /* exact algebra element */
typedef struct octavia_session octavia_session; /* command runner with settings */

OCTAVIA_API const char* octavia_version(void);
/* Message of the last failed call on this thread ("" if none). */
OCTAVIA_API const char* octavia_last_error(void);
/* Frees strings returned through char** out parameters. */
OCTAVIA_API void octavia_string_free(char* s);

/* Elements in the text format "<alg>:c0,c1,..." (doubled coordinates). */
OCTAVIA_API int octavia_elem_parse(const char* text, octavia_elem** out);
OCTAVIA_API void octavia_elem_free(octavia_elem* e);
OCTAVIA_API int octavia_elem_format(const octavia_elem* e, char** out);
OCTAVIA_API int octavia_elem_dim(const octavia_elem* e);
OCTAVIA_API int octavia_elem_mul(const octavia_elem* a, const octavia_elem* b, octavia_elem** out);
OCTAVIA_API int octavia_elem_add(const octavia_elem* a, const octavia_elem* b, octavia_elem** out);
OCTAVIA_API int octavia_elem_conj(const octavia_elem* a, octavia_elem** out);
/* |a|^2 = num / den. */
OCTAVIA_API int octavia_elem_norm(const octavia_elem* a, int64_t* num, int64_t* den);
/* ring: "z", "hurwitz" or "octavian". */
OCTAVIA_API int octavia_elem_is_member(const char* ring, const octavia_elem* a, int* result);

OCTAVIA_API int octavia_session_new(octavia_session** out);
OCTAVIA_API void octavia_session_free(octavia_session* s);
/* Worker threads for parallel sums (0 = hardware concurrency). */
OCTAVIA_API int octavia_session_set_threads(octavia_session* s, unsigned threads);
/* Runs a command (units, roots, group, euclid, coset, eisenstein, fourier, green, geodesic,
   orbit-length, verify, export) with a JSON object of arguments; *out receives JSON. */
OCTAVIA_API int octavia_run(octavia_session* s, const char* command, const char* args_json, char** out);
/* 0 iff every non-exploratory check in a verify report passed. */
OCTAVIA_API int octavia_verify_status(const char* report_json);

#ifdef __cplusplus
}
#endif

#endif /* OCTAVIA_H */
