/*
 * subsum - subsequence sums over finite abelian groups: cardinality-
 * stratified sumset computation, exhaustive theorem verification, and
 * extremal-invariant search (Davenport constant, f_{G,k}(r)).
 *
 * C API: opaque handles plus status codes. Every function that can fail
 * returns a subsum_status; on failure, subsum_last_error() describes the
 * problem for the calling thread. Handles are freed with the matching
 * *_free function; strings returned through char** are freed with
 * subsum_string_free.
 *
 * All run entry points are deterministic: the same inputs (including the
 * seed) produce byte-identical reports for any job count.
 */

#ifndef SUBSUM_H
#define SUBSUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SUBSUM_API __attribute__((visibility("default")))

typedef enum subsum_status {
    SUBSUM_OK = 0,
    SUBSUM_ERR_INVALID_ARGUMENT = 1,
    SUBSUM_ERR_PARSE = 2,
    SUBSUM_ERR_CAP_EXCEEDED = 3,
    SUBSUM_ERR_BUDGET_EXCEEDED = 4,
    SUBSUM_ERR_UNKNOWN_CLAIM = 5,
    SUBSUM_ERR_IO = 6,
    SUBSUM_ERR_CHECKPOINT_MISMATCH = 7,
    SUBSUM_ERR_INTERRUPTED = 8,
    SUBSUM_ERR_INTERNAL = 9
} subsum_status;

typedef struct subsum_group subsum_group;
typedef struct subsum_sequence subsum_sequence;
typedef struct subsum_profile subsum_profile;
typedef struct subsum_report subsum_report;

/* Resource caps; fill with subsum_caps_default then override fields. */
typedef struct subsum_caps {
    uint32_t order_cap;
    uint32_t length_cap;
    uint32_t aut_order_cap;
    uint64_t aut_count_cap;
    uint32_t brute_force_cap;
    uint32_t search_order_cap;
    uint64_t enum_budget;
} subsum_caps;

/* Progress callback: return nonzero to continue, 0 to stop gracefully.
 * A stopped run writes its checkpoint (when configured) and fails with
 * SUBSUM_ERR_INTERRUPTED. */
typedef int (*subsum_progress_fn)(void* user, uint64_t units_done, uint64_t units_total);

typedef struct subsum_run_options {
    uint32_t jobs;               /* worker count, >= 1 */
    uint64_t seed;               /* randomized checks only; fixed default 1 */
    uint32_t witness_cap;        /* witnesses kept per search result */
    const char* checkpoint_path; /* NULL = no checkpointing */
    subsum_progress_fn progress; /* NULL = never interrupted */
    void* progress_user;
    subsum_caps caps;
} subsum_run_options;

SUBSUM_API const char* subsum_version(void);
SUBSUM_API const char* subsum_last_error(void);
SUBSUM_API void subsum_string_free(char* s);
SUBSUM_API void subsum_caps_default(subsum_caps* caps);
SUBSUM_API void subsum_run_options_default(subsum_run_options* opt);

/* ---- groups ---- */

/* literal: comma-separated moduli, e.g. "3,3" or "6,4" (normalized to
 * invariant factors). */
SUBSUM_API subsum_status subsum_group_parse(const char* literal, const subsum_caps* caps,
                                            subsum_group** out);
SUBSUM_API subsum_status subsum_group_from_moduli(const uint64_t* moduli, size_t count,
                                                  const subsum_caps* caps, subsum_group** out);
SUBSUM_API void subsum_group_free(subsum_group* g);

SUBSUM_API uint32_t subsum_group_order(const subsum_group* g);
SUBSUM_API uint32_t subsum_group_exponent(const subsum_group* g);
SUBSUM_API uint32_t subsum_group_rank(const subsum_group* g);
SUBSUM_API subsum_status subsum_group_moduli(const subsum_group* g, uint32_t* buf, size_t buflen);
SUBSUM_API subsum_status subsum_group_literal(const subsum_group* g, char** out);

/* elements are dense indices in [0, order) */
SUBSUM_API subsum_status subsum_element_parse(const subsum_group* g, const char* text,
                                              uint32_t* out);
SUBSUM_API subsum_status subsum_element_format(const subsum_group* g, uint32_t e, char** out);
SUBSUM_API subsum_status subsum_element_add(const subsum_group* g, uint32_t a, uint32_t b,
                                            uint32_t* out);
SUBSUM_API subsum_status subsum_element_neg(const subsum_group* g, uint32_t a, uint32_t* out);
SUBSUM_API subsum_status subsum_element_order(const subsum_group* g, uint32_t a, uint32_t* out);

/* ---- sequences ---- */

/* literal: comma-separated elem^mult terms, e.g. "0^4,1^4,2,6" or
 * "(0,1)^3,(1,2)"; empty string = empty sequence. */
SUBSUM_API subsum_status subsum_sequence_parse(const subsum_group* g, const char* literal,
                                               const subsum_caps* caps, subsum_sequence** out);
SUBSUM_API void subsum_sequence_free(subsum_sequence* s);

SUBSUM_API uint32_t subsum_sequence_length(const subsum_sequence* s);
SUBSUM_API uint32_t subsum_sequence_sum(const subsum_sequence* s);
SUBSUM_API uint32_t subsum_sequence_support_size(const subsum_sequence* s);
SUBSUM_API uint32_t subsum_sequence_max_multiplicity(const subsum_sequence* s);
SUBSUM_API uint32_t subsum_sequence_multiplicity(const subsum_sequence* s, uint32_t e);
SUBSUM_API subsum_status subsum_sequence_literal(const subsum_sequence* s, char** out);
SUBSUM_API subsum_status subsum_sequence_is_zero_sum_free(const subsum_sequence* s, int* out);

/* ---- sumset profiles ---- */

SUBSUM_API subsum_status subsum_profile_compute(const subsum_sequence* s, subsum_profile** out);
/* Independent 2^|S| oracle; |S| <= caps.brute_force_cap. */
SUBSUM_API subsum_status subsum_profile_brute_force(const subsum_sequence* s,
                                                    const subsum_caps* caps,
                                                    subsum_profile** out);
SUBSUM_API void subsum_profile_free(subsum_profile* p);

SUBSUM_API uint32_t subsum_profile_length(const subsum_profile* p);
SUBSUM_API subsum_status subsum_profile_k_cardinality(const subsum_profile* p, uint32_t k,
                                                      uint32_t* out);
SUBSUM_API subsum_status subsum_profile_k_contains(const subsum_profile* p, uint32_t k,
                                                   uint32_t e, int* out);
/* writes the members of Sigma_k into buf (ascending); *count in/out */
SUBSUM_API subsum_status subsum_profile_k_members(const subsum_profile* p, uint32_t k,
                                                  uint32_t* buf, size_t* count);

/* ---- verification and search runs (all produce reports) ---- */

SUBSUM_API subsum_status subsum_verify_sigma_lower_bound(const subsum_group* g, uint32_t max_len,
                                                         const subsum_run_options* opt,
                                                         subsum_report** out);
SUBSUM_API subsum_status subsum_verify_equality_classification(const subsum_group* g,
                                                               uint32_t max_len,
                                                               const subsum_run_options* opt,
                                                               subsum_report** out);
SUBSUM_API subsum_status subsum_verify_geqk_bound(const subsum_group* g, uint32_t max_len,
                                                  const subsum_run_options* opt,
                                                  subsum_report** out);
/* mode: "direct" or "reduced" */
SUBSUM_API subsum_status subsum_verify_sigma_n_bound(const subsum_group* g, uint32_t r_max,
                                                     const char* mode,
                                                     const subsum_run_options* opt,
                                                     subsum_report** out);
SUBSUM_API subsum_status subsum_counterexample_check(uint32_t n, const subsum_run_options* opt,
                                                     subsum_report** out);
/* lemmas: comma-separated ids out of pixton,olson,c2sum,reduction,subsets;
 * NULL or "" = all */
SUBSUM_API subsum_status subsum_check_lemmas(const char* lemmas, uint64_t trials,
                                             const subsum_run_options* opt, subsum_report** out);
SUBSUM_API subsum_status subsum_verify_egz(uint32_t n, const subsum_run_options* opt,
                                           subsum_report** out);
SUBSUM_API subsum_status subsum_verify_gao(const subsum_group* g, const subsum_run_options* opt,
                                           subsum_report** out);

SUBSUM_API subsum_status subsum_davenport(const subsum_group* g, const subsum_run_options* opt,
                                          subsum_report** out);
/* *present = 0 when no literature value applies (rank >= 3) */
SUBSUM_API subsum_status subsum_davenport_known(const subsum_group* g, int64_t* value,
                                                int* present);
SUBSUM_API subsum_status subsum_fgkr(const subsum_group* g, uint32_t k, uint32_t r,
                                     int orbit_reduce, const subsum_run_options* opt,
                                     subsum_report** out);
SUBSUM_API subsum_status subsum_fgkr_closed_forms(const subsum_group* g, uint32_t r,
                                                  const subsum_run_options* opt,
                                                  subsum_report** out);

SUBSUM_API subsum_status subsum_group_info(const subsum_group* g, const subsum_caps* caps,
                                           subsum_report** out);
/* k / geq: pass -1 to omit */
SUBSUM_API subsum_status subsum_sumset_report(const subsum_sequence* s, int64_t k, int64_t geq,
                                              subsum_report** out);

/* Bitmask of matched classification forms: bit i-1 set = form i. The
 * sequence must be zero-sum free. */
SUBSUM_API subsum_status subsum_classify_equality_form(const subsum_sequence* s, uint32_t* mask);

/* ---- reports ---- */

SUBSUM_API void subsum_report_free(subsum_report* r);
SUBSUM_API uint64_t subsum_report_violation_count(const subsum_report* r);
SUBSUM_API uint64_t subsum_report_instances_checked(const subsum_report* r);
SUBSUM_API double subsum_report_elapsed_seconds(const subsum_report* r);
SUBSUM_API subsum_status subsum_report_to_json(const subsum_report* r, char** out);
SUBSUM_API subsum_status subsum_report_to_table(const subsum_report* r, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUBSUM_H */
