#ifndef ISOCX_H
#define ISOCX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Suite bits for [`isocx_config_set_suites`].
#define ISOCX_SUITE_MAIN 1

#define ISOCX_SUITE_GAMMA 2

#define ISOCX_SUITE_BAR 4

#define ISOCX_SUITE_GROUPS 8

#define ISOCX_SUITE_APPENDIX 16

#define ISOCX_SUITE_ALL 31

typedef enum IsocxStatus {
  ISOCX_STATUS_OK = 0,
  ISOCX_STATUS_NULL_POINTER = 1,
  ISOCX_STATUS_INVALID_CONFIG = 2,
  ISOCX_STATUS_NOT_PRIME = 3,
  ISOCX_STATUS_SIZE_CAP = 4,
  ISOCX_STATUS_BUDGET = 5,
  ISOCX_STATUS_OUT_OF_RANGE = 6,
  ISOCX_STATUS_INTERNAL = 7,
  ISOCX_STATUS_PANIC = 8,
} IsocxStatus;

// Opaque suite configuration.
typedef struct IsocxConfig IsocxConfig;

// Opaque verification report.
typedef struct IsocxReport IsocxReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the next call.
const char *isocx_last_error_message(void);

// A configuration with the library defaults.
struct IsocxConfig *isocx_config_new(void);

// # Safety
// `cfg` must come from [`isocx_config_new`] and not be used afterwards.
void isocx_config_free(struct IsocxConfig *cfg);

// # Safety
// `cfg` must be a live handle and `primes` must point to `len` values.
enum IsocxStatus isocx_config_set_primes(struct IsocxConfig *cfg,
                                         const uint32_t *primes,
                                         size_t len);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_suites(struct IsocxConfig *cfg, uint32_t mask);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_rmax(struct IsocxConfig *cfg, uint32_t rmax);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_trunc(struct IsocxConfig *cfg, size_t trunc);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_ext(struct IsocxConfig *cfg, uint32_t ext);

// Torsion level M; 0 means M = r for each case.
//
// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_torsion(struct IsocxConfig *cfg, uint32_t m);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_mmax(struct IsocxConfig *cfg, uint64_t mmax);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_jobs(struct IsocxConfig *cfg, size_t jobs);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_seed(struct IsocxConfig *cfg, uint64_t seed);

// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_set_timings(struct IsocxConfig *cfg, bool on);

// Checks the configuration without running anything.
//
// # Safety
// `cfg` must be a live handle.
enum IsocxStatus isocx_config_validate(const struct IsocxConfig *cfg);

// Runs the configured suites. On success `*out` receives a report handle.
//
// # Safety
// `cfg` must be a live handle and `out` writable.
enum IsocxStatus isocx_run(const struct IsocxConfig *cfg, struct IsocxReport **out);

// # Safety
// `report` must come from [`isocx_run`] and not be used afterwards.
void isocx_report_free(struct IsocxReport *report);

// Number of case records, or 0 for NULL.
//
// # Safety
// `report` must be a live handle or NULL.
size_t isocx_report_len(const struct IsocxReport *report);

// # Safety
// `report` must be a live handle or NULL.
bool isocx_report_all_pass(const struct IsocxReport *report);

// # Safety
// `report` must be a live handle and `pass` writable.
enum IsocxStatus isocx_report_case_pass(const struct IsocxReport *report, size_t index, bool *pass);

// Serializes the report. `*out` receives a string to release with [`isocx_string_free`].
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IsocxStatus isocx_report_render(const struct IsocxReport *report, bool csv, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void isocx_string_free(char *s);

// Ranks of H^j(K_{p^r} ⊗ F_p) at the closed point for j = 0..=r, written to
// `ranks[0..=r]`; `len` must be at least r + 1.
//
// # Safety
// `ranks` must point to `len` writable values.
enum IsocxStatus isocx_closed_point_ranks(uint32_t p, uint32_t r, size_t *ranks, size_t len);

// Whether F_{mn}(x,z) lies in (F_m(x,y), F_n(y,z)) over ℤ.
//
// # Safety
// `member` must be writable.
enum IsocxStatus isocx_ideal_membership(uint64_t m, uint64_t n, bool *member);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ISOCX_H */
