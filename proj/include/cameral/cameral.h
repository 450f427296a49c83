#ifndef CAMERAL_H
#define CAMERAL_H

/* C interface to the cubic library. Reports are JSON documents returned as
 * heap strings owned by the caller (release with cc_string_free). Exact values
 * are rendered as "p/q" strings unless the float format is selected. */

#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum cc_status {
    CC_OK = 0,
    CC_ERR_INPUT = 2,
    CC_ERR_DEGENERATE = 3,
    CC_ERR_IRRATIONAL = 4,
    CC_ERR_INTERNAL = 5
} cc_status;

typedef struct cc_problem cc_problem;

typedef struct cc_options {
    int order;        /* 0: take the document's order (default 8) */
    int float_format; /* -1: document, 0: exact strings, 1: decimals */
} cc_options;

/* Parses and validates a problem document. On failure *out is NULL. */
CC_API cc_status cc_problem_parse(const char* json_text, cc_problem** out);
CC_API void cc_problem_free(cc_problem* problem);

/* opts may be NULL. On failure *report is NULL and cc_last_error() explains. */
CC_API cc_status cc_analyze(const cc_problem* problem, const cc_options* opts, char** report);

/* evaluator: "pantev", "ks", "symmetric", "sl2" or "all". */
CC_API cc_status cc_eval(const cc_problem* problem, const char* beta, const char* gamma, const char* delta,
                         const char* evaluator, const cc_options* opts, char** report);

/* basis_csv: comma-separated deformation names. */
CC_API cc_status cc_tensor(const cc_problem* problem, const char* basis_csv, const char* evaluator,
                           const cc_options* opts, char** report);

/* Returns CC_ERR_INTERNAL with a complete report when an identity fails. */
CC_API cc_status cc_verify(const cc_problem* problem, int trials, uint64_t seed, const cc_options* opts,
                           char** report);

CC_API void cc_string_free(char* s);

/* Message for the last failure on this thread; "" if none. */
CC_API const char* cc_last_error(void);
CC_API const char* cc_status_name(cc_status status);
CC_API const char* cc_version(void);

#ifdef __cplusplus
}
#endif

#endif
