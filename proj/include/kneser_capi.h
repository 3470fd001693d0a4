/* C interface to the Kneser graph classification library.
 *
 * All functions return kn_status; output parameters are written only on
 * KN_OK. Strings returned through char** are heap-allocated and must be
 * released with kn_string_free. kn_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef KNESER_CAPI_H
#define KNESER_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kn_status {
  KN_OK = 0,
  KN_ERR_DOMAIN = 1,    /* input outside a stated hypothesis */
  KN_ERR_PARSE = 2,     /* malformed cycle notation or subset literal */
  KN_ERR_RESOURCE = 3,  /* request exceeds a configured bound */
  KN_ERR_INVARIANT = 4, /* a runtime-checked certificate failed */
  KN_ERR_ARG = 5        /* null pointer or otherwise unusable argument */
} kn_status;

const char* kn_last_error(void);
void kn_string_free(char* s);

/* --- binomial-coefficient arithmetic --- */

kn_status kn_lucas_residue(uint64_t m, uint64_t n, uint64_t p, uint64_t* out);
kn_status kn_binom_exact(uint64_t m, uint64_t n, char** out_decimal);
/* JSON: {k, binary_digits, zero_index?, verdict: "Even"|"Odd"} */
kn_status kn_odd_order_parity(uint64_t k, char** out_json);
kn_status kn_multiple_of_4(uint64_t k, int* out);

/* --- permutations (opaque) --- */

typedef struct kn_perm kn_perm;

/* Cycle notation, e.g. "(1 2)(3 4)"; "" is the identity. */
kn_status kn_perm_parse(const char* cycles, uint32_t degree, kn_perm** out);
void kn_perm_free(kn_perm* p);
kn_status kn_perm_order(const kn_perm* p, uint64_t* out);
kn_status kn_perm_cycles(const kn_perm* p, char** out_text);

/* --- fixed-vertex witnesses (subsets rendered as "{a,b,c}") --- */

kn_status kn_fixed_vertex(const kn_perm* p, uint32_t n, uint32_t k, char** out_subset);
kn_status kn_disjoint_fixed_pair(const kn_perm* p, uint32_t n, uint32_t k,
                                 char** out_v, char** out_w);

/* --- classification (one JSON record per call) --- */

kn_status kn_classify_kneser(uint32_t n, uint32_t k, char** out_json);
kn_status kn_classify_odd(uint64_t k, char** out_json);
kn_status kn_classify_line_odd(uint64_t k, char** out_json);

/* --- line graph --- */

kn_status kn_line_order_odd(uint64_t k, char** out_decimal);

/* --- verification (JSON reports) --- */

/* sample_count == 0 requests an exhaustive sweep (n <= 12). */
kn_status kn_verify_involutions(uint32_t n, uint32_t k, uint64_t sample_count,
                                uint64_t seed, char** out_json);
kn_status kn_search_regular_subgroup(uint32_t n, uint32_t k, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* KNESER_CAPI_H */
