/* C interface to the plateau-rollercoaster library.
 *
 * All objects are opaque handles created and released through this header.
 * Functions return a plrc_status; outputs are written through pointers.
 * Counts are returned as decimal strings since they need arbitrary
 * precision. Witness and enumeration buffers never need more than
 * plrc_word_length() entries. Handles are not thread-safe individually, but
 * distinct handles may be used from distinct threads.
 */

#ifndef PLRC_H
#define PLRC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct plrc_word plrc_word;
typedef struct plrc_enum plrc_enum;

typedef enum plrc_status {
  PLRC_OK = 0,
  PLRC_ERR_INVALID_ARGUMENT = 1,
  PLRC_ERR_EMPTY_WORD = 2,
  PLRC_ERR_INVALID_H = 3,
  PLRC_ERR_TOO_FEW_WORDS = 4,
  PLRC_ERR_TOO_LARGE = 5,
  PLRC_ERR_MEMORY_BUDGET = 6,
  PLRC_ERR_TABLE_MISMATCH = 7,
  PLRC_ERR_PARSE = 8,
  PLRC_ERR_BUFFER_TOO_SMALL = 9,
  PLRC_ERR_INTERNAL = 10,
  PLRC_END = 100 /* stream exhausted; not an error */
} plrc_status;

/* short description of a status code (static storage) */
const char* plrc_status_name(int status);

/* detail message for the most recent failure on this thread */
const char* plrc_last_error(void);

/* ---- words ------------------------------------------------------------- */

/* letters must lie in [1, sigma]; pass sigma = 0 to use the maximum letter */
plrc_word* plrc_word_create(const int* letters, int length, int sigma, int* status);
void plrc_word_free(plrc_word* w);
int plrc_word_length(const plrc_word* w);
int plrc_word_sigma(const plrc_word* w);

/* ---- validation -------------------------------------------------------- */

int plrc_is_rollercoaster(const plrc_word* w, int k, int* out_is);

/* maximal-run decomposition; orientation: 1 up, -1 down, 0 unary */
int plrc_run_count(const plrc_word* w, int* out_count);
int plrc_run_get(const plrc_word* w, int index, int* out_start, int* out_end,
                 int* out_orientation, int* out_distinct);

/* ---- longest / counting ------------------------------------------------ */

int plrc_longest(const plrc_word* w, int k, int* out_length);

/* out_length receives the witness length (0 when no rollercoaster exists);
 * capacity must be at least plrc_word_length(w) */
int plrc_longest_witness(const plrc_word* w, int k, int* out_letters, int capacity,
                         int* out_length);

/* decimal string, NUL terminated; *out_length receives strlen. When the
 * buffer is too small, returns PLRC_ERR_BUFFER_TOO_SMALL and *out_length
 * holds the required capacity (including the NUL). */
int plrc_count_maximum(const plrc_word* w, int k, char* out_decimal, int capacity,
                       int* out_length);

/* ---- enumeration (pull stream) ------------------------------------------ */

plrc_enum* plrc_enum_open(const plrc_word* w, int k, int* status);
/* PLRC_OK with one word written, or PLRC_END when exhausted */
int plrc_enum_next(plrc_enum* e, int* out_letters, int capacity, int* out_length);
void plrc_enum_free(plrc_enum* e);

/* ---- longest common rollercoaster --------------------------------------- */

/* memory_budget_bytes = 0 selects the default (1 GiB) */
int plrc_lcr(const plrc_word* const* words, int num_words, int k,
             unsigned long long memory_budget_bytes, int* out_length);
int plrc_lcr_witness(const plrc_word* const* words, int num_words, int k,
                     unsigned long long memory_budget_bytes, int* out_letters, int capacity,
                     int* out_length);

/* ---- next-element graph -------------------------------------------------- */

/* label: 0 up, 1 eq, 2 down. Arrays sized `capacity`; *out_count receives
 * the edge count (required capacity on PLRC_ERR_BUFFER_TOO_SMALL). */
int plrc_neg_edges(const plrc_word* w, int* out_from, int* out_to, int* out_label, int capacity,
                   int* out_count);

/* ---- brute-force cross-check --------------------------------------------- */

/* Compares longest/count/enumerate against the exhaustive reference on a
 * small word (length cap 16, PLRC_ERR_TOO_LARGE beyond). *out_agree is 1 on
 * agreement; detail (may be NULL) receives a short description of the first
 * difference. */
int plrc_oracle_check(const plrc_word* w, int k, int* out_agree, char* detail, int detail_capacity);

#ifdef __cplusplus
}
#endif

#endif /* PLRC_H */
