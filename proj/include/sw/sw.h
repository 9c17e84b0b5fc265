#ifndef SW_SW_H
#define SW_SW_H

/* C interface to the Serre-weight library. Every function returns an
 * sw_status; on failure sw_last_error() describes the problem for the
 * calling thread. Strings handed out by the library are released with
 * sw_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SW_API __declspec(dllexport)
#else
#define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_INPUT = 1,
  SW_ERR_PRECONDITION = 2,
  SW_ERR_NOT_A_WEIGHT = 3,
  SW_ERR_BUDGET = 4,
  SW_ERR_INVARIANT = 5,
  SW_ERR_AMBIGUITY = 6,
  SW_ERR_OVERFLOW = 7,
  SW_ERR_INTERNAL = 99
} sw_status;

typedef enum sw_format { SW_FORMAT_JSON = 0, SW_FORMAT_TSV = 1, SW_FORMAT_PRETTY = 2 } sw_format;

typedef struct sw_flags {
  int chi_trivial;
  int chi_cyclotomic;
  int chi_inv_cyclotomic;
  int chi2_unramified;
} sw_flags;

typedef struct sw_pair sw_pair;

typedef struct sw_verify_config {
  const int64_t* primes;
  size_t primes_len;
  int64_t max_f;
  int64_t max_e;
  int64_t max_ef;
  const char* filter; /* all | weak | strong | boundary; NULL means weak */
  const char* suites; /* comma-separated; NULL means every suite */
  int64_t class_samples;
  int jobs;
  uint64_t seed;
  int rotation_check;
  int deterministic;
} sw_verify_config;

SW_API const char* sw_version(void);
SW_API const char* sw_status_name(sw_status status);
/* Message of the last failing call on this thread; empty after success. */
SW_API const char* sw_last_error(void);
SW_API void sw_string_free(char* s);

SW_API void sw_verify_config_init(sw_verify_config* config);

/* n: normalized inertia exponents (length f); n2: exponents of chi2 on
 * inertia (length f, any integers). flags may be NULL. Inconsistent flags
 * are rejected with SW_ERR_INPUT. */
SW_API sw_status sw_pair_create(int64_t p, int64_t f, int64_t e, const int64_t* n, size_t n_len, const int64_t* n2,
                                size_t n2_len, const sw_flags* flags, sw_pair** out);
SW_API void sw_pair_destroy(sw_pair* pair);

SW_API int sw_pair_weakly_generic(const sw_pair* pair);
SW_API int sw_pair_strongly_generic(const sw_pair* pair);
/* Number of weights in the semisimple weight set. */
SW_API sw_status sw_pair_wexp_count(const sw_pair* pair, int64_t* out);

/* cls may be NULL (zero class). */
SW_API sw_status sw_render_weights(const sw_pair* pair, const char* cls, sw_format format, char** out);
SW_API sw_status sw_render_jah(const sw_pair* pair, const char* weight, sw_format format, char** out);
SW_API sw_status sw_render_sset(const sw_pair* pair, const char* weight, sw_format format, char** out);
SW_API sw_status sw_render_packets(const sw_pair* pair, sw_format format, char** out);

/* J lists embedding indices; tau0 < 0 selects the smallest admissible start. */
SW_API sw_status sw_render_congruence(int64_t p, int64_t f, const int64_t* J, size_t J_len, const int64_t* c,
                                      size_t c_len, int tau0, sw_format format, char** out);

/* violations may be NULL. */
SW_API sw_status sw_verify(const sw_verify_config* config, sw_format format, char** out, int64_t* violations);

#ifdef __cplusplus
}
#endif

#endif
