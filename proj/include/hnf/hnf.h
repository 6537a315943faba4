/*
 * C interface to the unipotent class calculator.
 *
 * Values live behind opaque handles and are immutable once created. Every
 * function returns an hnf_status; on failure the out-parameters are left
 * untouched and hnf_last_error() describes the problem for the calling
 * thread. Strings returned through char** are heap-allocated and must be
 * released with hnf_string_free().
 */
#ifndef HNF_HNF_H
#define HNF_HNF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HNF_BUILDING)
#    define HNF_API __declspec(dllexport)
#  else
#    define HNF_API __declspec(dllimport)
#  endif
#else
#  define HNF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hnf_status {
    HNF_OK = 0,
    HNF_INVALID_ARGUMENT = 1, /* null pointer, out-of-range value */
    HNF_PARSE_ERROR = 2,      /* see hnf_last_error_position() */
    HNF_CONSTRAINT = 3,       /* tagged type breaks a parity law */
    HNF_OVERFLOW = 4,         /* 64-bit arithmetic overflow */
    HNF_DEGENERATE = 5,
    HNF_NOT_UNIPOTENT = 6,
    HNF_MISMATCH = 7,         /* a comparison or verification failed */
    HNF_IO_ERROR = 8,
    HNF_INTERNAL = 9
} hnf_status;

/* Multiset of Jordan block sizes, text form "d^m,d^m,...". */
typedef struct hnf_jordan hnf_jordan;
/* Jordan type with epsilon tags, text form "d_e^m,...". May be degenerate. */
typedef struct hnf_form hnf_form;
/* Results of one or more verification sweeps. */
typedef struct hnf_reports hnf_reports;

HNF_API const char* hnf_version(void);
HNF_API const char* hnf_status_name(hnf_status s);
/* Message for the last failing call on this thread, "" if none. */
HNF_API const char* hnf_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
HNF_API int64_t hnf_last_error_position(void);
HNF_API void hnf_string_free(char* s);
/* HNF_THREADS if set and positive, otherwise the hardware concurrency. */
HNF_API unsigned hnf_default_threads(void);

/* ---- Jordan types ---- */

HNF_API hnf_status hnf_jordan_parse(const char* text, hnf_jordan** out);
HNF_API hnf_status hnf_jordan_from_json(const char* json, hnf_jordan** out);
HNF_API void hnf_jordan_free(hnf_jordan* j);
HNF_API hnf_status hnf_jordan_format(const hnf_jordan* j, char** out);
HNF_API hnf_status hnf_jordan_to_json(const hnf_jordan* j, char** out);
HNF_API hnf_status hnf_jordan_dimension(const hnf_jordan* j, uint64_t* out);
HNF_API hnf_status hnf_jordan_block_count(const hnf_jordan* j, size_t* out);
HNF_API hnf_status hnf_jordan_block(const hnf_jordan* j, size_t index, uint64_t* size, uint64_t* mult);
HNF_API hnf_status hnf_jordan_equal(const hnf_jordan* a, const hnf_jordan* b, int* out);

HNF_API hnf_status hnf_tensor_blocks(uint64_t m, uint64_t n, hnf_jordan** out);
HNF_API hnf_status hnf_tensor(const hnf_jordan* a, const hnf_jordan* b, hnf_jordan** out);
HNF_API hnf_status hnf_tensor_square_closed(uint64_t n, hnf_jordan** out);
HNF_API hnf_status hnf_wedge_block(uint64_t n, hnf_jordan** out);
HNF_API hnf_status hnf_wedge_square(const hnf_jordan* j, hnf_jordan** out);
HNF_API hnf_status hnf_restrict_power(const hnf_jordan* j, unsigned alpha, hnf_jordan** out);
HNF_API hnf_status hnf_induce_power(const hnf_jordan* j, unsigned alpha, hnf_jordan** out);
/* Minimal alternating-sign expansion as text, e.g. 7 -> "2^3-2^0". */
HNF_API hnf_status hnf_consecutive_ones(uint64_t n, char** text);
/* Size of the single odd block of V_m (x) V_n, m and n odd. */
HNF_API hnf_status hnf_unique_odd_block(uint64_t m, uint64_t n, uint64_t* out);

/* ---- Tagged types ---- */

HNF_API hnf_status hnf_form_parse(const char* text, hnf_form** out);
/* Also requires every untagged size to have even multiplicity. */
HNF_API hnf_status hnf_form_parse_symplectic(const char* text, hnf_form** out);
HNF_API hnf_status hnf_form_from_json(const char* json, hnf_form** out);
HNF_API void hnf_form_free(hnf_form* f);
HNF_API hnf_status hnf_form_format(const hnf_form* f, char** out);
HNF_API hnf_status hnf_form_to_json(const hnf_form* f, char** out);
HNF_API hnf_status hnf_form_dimension(const hnf_form* f, uint64_t* out);
HNF_API hnf_status hnf_form_entry_count(const hnf_form* f, size_t* out);
HNF_API hnf_status hnf_form_entry(const hnf_form* f, size_t index, uint64_t* size, uint64_t* mult, int* eps);
HNF_API hnf_status hnf_form_equal(const hnf_form* a, const hnf_form* b, int* out);
HNF_API hnf_status hnf_form_is_symplectic(const hnf_form* f, int* out);
HNF_API hnf_status hnf_form_is_distinguished(const hnf_form* f, int* out);
HNF_API hnf_status hnf_form_jordan(const hnf_form* f, hnf_jordan** out);

/* The operands below must be symplectic; HNF_CONSTRAINT otherwise. */
HNF_API hnf_status hnf_orthogonal_sum(const hnf_form* a, const hnf_form* b, hnf_form** out);
HNF_API hnf_status hnf_tensor_bilinear(const hnf_form* a, const hnf_form* b, hnf_form** out);
HNF_API hnf_status hnf_restrict_bilinear(const hnf_form* f, unsigned alpha, hnf_form** out);
HNF_API hnf_status hnf_induce_bilinear(const hnf_form* f, unsigned alpha, hnf_form** out);

/* ---- Representations ---- */

/* u acting on V (x) V* and on its irreducible subquotient, dim V >= 2. */
HNF_API hnf_status hnf_theorem_A(const hnf_jordan* j, hnf_form** ambient, hnf_form** irreducible, unsigned* alpha);
/* u acting on the exterior square and its irreducible subquotient, dim >= 4. */
HNF_API hnf_status hnf_theorem_C(const hnf_form* f, hnf_form** ambient, hnf_form** irreducible, unsigned* alpha);

/* ---- Tables ---- */

/* which = 'A' or 'C'. Rows separated by '\n', no trailing newline. */
HNF_API hnf_status hnf_table(char which, uint64_t lo, uint64_t hi, int all, char** out);
/* Compares rows with a golden file. HNF_MISMATCH with the differences in
 * *report (one per line) if they disagree; *report is "" on a match. */
HNF_API hnf_status hnf_table_compare(const char* rows, const char* golden_path, char** report);

/* ---- Verification sweeps ---- */

typedef struct hnf_oracle_options {
    uint64_t max_dim;     /* symplectic dimension for the exterior square sweep */
    uint64_t max_sl;      /* SL dimension for the V (x) V* sweep */
    uint64_t max_product; /* dimension bound for bilinear tensor products */
    uint64_t max_jordan;  /* dimension bound for plain Jordan-type checks */
    unsigned threads;
} hnf_oracle_options;

/* Bounds above 32/16/256/40 give HNF_INVALID_ARGUMENT. */
HNF_API hnf_oracle_options hnf_oracle_options_default(void);
HNF_API hnf_status hnf_oracle_check(const hnf_oracle_options* opt, hnf_reports** out);

typedef enum hnf_prop {
    HNF_PROP_A_TENSOR = 0, /* bound = max SL dimension */
    HNF_PROP_A_IRR = 1,    /* bound = max SL dimension */
    HNF_PROP_TENSOR = 2,   /* bound = max product dimension */
    HNF_PROP_C = 3         /* bound = max half dimension */
} hnf_prop;

HNF_API hnf_status hnf_verify_prop(hnf_prop which, uint64_t bound, unsigned threads, hnf_reports** out);
/* Appends the reports of src to dst; src is left unchanged. */
HNF_API hnf_status hnf_reports_append(hnf_reports* dst, const hnf_reports* src);
HNF_API void hnf_reports_free(hnf_reports* r);
HNF_API hnf_status hnf_reports_ok(const hnf_reports* r, int* out);
HNF_API hnf_status hnf_reports_count(const hnf_reports* r, size_t* out);
/* One "PASS name: N checked, F failed (Xs)" line per report plus counterexamples. */
HNF_API hnf_status hnf_reports_text(const hnf_reports* r, char** out);
/* {"ok": bool, "reports": [{"name", "checked", "failures", "counterexamples", "seconds", "ok"}]} */
HNF_API hnf_status hnf_reports_json(const hnf_reports* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
