/* C interface to the rm3 random 3-manifold homology library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return an rm3_status; on failure a
 * thread-local message is available from rm3_last_error(). Strings returned
 * through char** out-parameters are heap-allocated and released with
 * rm3_string_free().
 */
#ifndef RM3_RM3_H
#define RM3_RM3_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef RM3_BUILDING_LIBRARY
#    define RM3_API __declspec(dllexport)
#  else
#    define RM3_API __declspec(dllimport)
#  endif
#else
#  define RM3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rm3_status {
  RM3_OK = 0,
  RM3_ERR_INVALID_ARGUMENT = 1, /* bad argument to a library call */
  RM3_ERR_CONFIG = 2,           /* invalid experiment configuration */
  RM3_ERR_IO = 3,               /* file could not be read or written */
  RM3_ERR_INTERNAL = 4          /* internal invariant violated */
} rm3_status;

typedef struct rm3_matrix rm3_matrix;
typedef struct rm3_family rm3_family;

RM3_API const char* rm3_version(void);
RM3_API const char* rm3_last_error(void);
RM3_API void rm3_string_free(char* s);

/* ---- matrices ---- */

/* Text format: dimension, then rows of whitespace-separated decimal integers. */
RM3_API rm3_status rm3_matrix_parse(const char* text, rm3_matrix** out);
RM3_API rm3_status rm3_matrix_read_file(const char* path, rm3_matrix** out);
/* Row-major dim*dim entries. */
RM3_API rm3_status rm3_matrix_from_int64(size_t dim, const int64_t* entries, rm3_matrix** out);
RM3_API void rm3_matrix_free(rm3_matrix* m);
RM3_API size_t rm3_matrix_dim(const rm3_matrix* m);
/* Decimal string of entry (row, col). */
RM3_API rm3_status rm3_matrix_entry(const rm3_matrix* m, size_t row, size_t col, char** out);
RM3_API rm3_status rm3_matrix_to_string(const rm3_matrix* m, char** out);
RM3_API rm3_status rm3_matrix_mul(const rm3_matrix* a, const rm3_matrix* b, rm3_matrix** out);
RM3_API rm3_status rm3_matrix_det(const rm3_matrix* m, char** out);
RM3_API rm3_status rm3_matrix_is_symplectic(const rm3_matrix* m, int* out);

/* ---- homology ---- */

/* Elementary divisors as a JSON array of decimal strings. */
RM3_API rm3_status rm3_smith_normal_form(const rm3_matrix* m, char** json_out);
/* {"betti": n, "torsion": ["d1", ...], "torsion_order": "t"} */
RM3_API rm3_status rm3_mapping_torus_homology(const rm3_matrix* m, char** json_out);
RM3_API rm3_status rm3_heegaard_homology(const rm3_matrix* m, char** json_out);
RM3_API rm3_status rm3_fp_rank(const rm3_matrix* m, uint64_t p, size_t* out);

/* ---- prescribed homology ---- */

/* chain: comma-separated divisibility chain of even length. */
RM3_API rm3_status rm3_prescribe(const char* chain, rm3_matrix** out);
RM3_API rm3_status rm3_verify_prescription(const rm3_matrix* m, const char* chain, int* out);

/* ---- generator families ---- */

/* name: "humphries" (parameter = genus), "hua-reiner" or "stanek" (parameter = n). */
RM3_API rm3_status rm3_family_create(const char* name, size_t parameter, rm3_family** out);
RM3_API void rm3_family_free(rm3_family* f);
RM3_API size_t rm3_family_size(const rm3_family* f);
RM3_API rm3_status rm3_family_get(const rm3_family* f, size_t index, rm3_matrix** out);

/* ---- experiments ---- */

/* Runs the experiment described by a JSON config (or an emitted manifest).
 * When out_prefix is non-NULL, <out_prefix>.csv and <out_prefix>.json are written.
 * manifest_out / csv_out may be NULL. */
RM3_API rm3_status rm3_run_experiment(const char* config_json, const char* out_prefix,
                                      char** manifest_out, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* RM3_RM3_H */
