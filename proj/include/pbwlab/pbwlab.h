/* pbwlab — combinatorics of PBW degenerate flag varieties in type A.
 *
 * C API of the shared library. All functions returning pbwlab_status set
 * their out-parameters only on PBWLAB_OK. Strings handed out through
 * `char**` are heap-allocated decimal/text buffers owned by the caller;
 * release them with pbwlab_string_free. Opaque handles are released with
 * their matching *_free function; every *_free accepts NULL.
 *
 * Integer results that can exceed 64 bits are always returned as decimal
 * strings. Weights, dimension vectors, and coordinates are plain int64
 * arrays with an explicit length.
 */
#ifndef PBWLAB_H
#define PBWLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pbwlab_status {
    PBWLAB_OK = 0,
    PBWLAB_ERROR_INVALID_ARGUMENT = 1, /* bad rank/weight/entry/dimension */
    PBWLAB_ERROR_INCOMPATIBLE = 2,     /* operands over different ranks */
    PBWLAB_ERROR_NOT_REALIZABLE = 3,   /* rank tuple without a representation */
    PBWLAB_ERROR_RESOURCE_LIMIT = 4,   /* instance exceeds the work bound */
    PBWLAB_ERROR_INVALID_FIELD = 5,    /* unsupported finite field size */
    PBWLAB_ERROR_NULL_ARGUMENT = 6,
    PBWLAB_ERROR_INTERNAL = 7
} pbwlab_status;

const char* pbwlab_version(void);
const char* pbwlab_status_name(pbwlab_status status);
/* Detail message of the most recent failure on this thread ("" if none). */
const char* pbwlab_last_error_message(void);
void pbwlab_string_free(char* s);

/* ---- weights and dimensions ------------------------------------------- */

/* dim V_lambda for lambda = sum m[k]*omega_{k+1} of sl_n; decimal string. */
pbwlab_status pbwlab_weyl_dim(int n, const int64_t* m, size_t m_len, char** out);

/* Number of Gelfand-Tsetlin patterns with top row the partition of lambda. */
pbwlab_status pbwlab_gt_pattern_count(int n, const int64_t* m, size_t m_len, char** out);

/* Number of PBW semistandard tableaux of the shape of lambda. */
pbwlab_status pbwlab_pbw_tableau_count(int n, const int64_t* m, size_t m_len, char** out);

/* ---- FFLV lattice points ---------------------------------------------- */

typedef struct pbwlab_point_set pbwlab_point_set;

/* The lattice points S(lambda) of the FFLV polytope, lexicographic order. */
pbwlab_status pbwlab_fflv_points(int n, const int64_t* m, size_t m_len,
                                 pbwlab_point_set** out);
void pbwlab_point_set_free(pbwlab_point_set* set);
/* Rank parameter n, or -1 on NULL. */
int pbwlab_point_set_rank(const pbwlab_point_set* set);
/* Number of points, or -1 on NULL. */
int64_t pbwlab_point_set_size(const pbwlab_point_set* set);
/* Entries per point: n(n-1)/2, in lexicographic positive-root order. */
pbwlab_status pbwlab_point_set_coords(const pbwlab_point_set* set, size_t index,
                                      int64_t* out, size_t out_len);
pbwlab_status pbwlab_point_set_minkowski(const pbwlab_point_set* a,
                                         const pbwlab_point_set* b,
                                         pbwlab_point_set** out);
/* 1 if equal as sets, 0 if not, -1 on NULL or rank mismatch. */
int pbwlab_point_set_equal(const pbwlab_point_set* a, const pbwlab_point_set* b);

/* ---- q-polynomials ----------------------------------------------------- */

typedef struct pbwlab_poly pbwlab_poly;

typedef enum pbwlab_genocchi_formula {
    PBWLAB_GENOCCHI_DELLAC = 0,    /* length generating function over DC_n */
    PBWLAB_GENOCCHI_FERMIONIC = 1  /* q-binomial summation formula */
} pbwlab_genocchi_formula;

/* Normalized median Genocchi number h_n (closed formula); decimal string. */
pbwlab_status pbwlab_genocchi_number(int n, char** out);
pbwlab_status pbwlab_genocchi_poly(int n, pbwlab_genocchi_formula formula,
                                   pbwlab_poly** out);
pbwlab_status pbwlab_q_binomial(int64_t m, int64_t k, pbwlab_poly** out);
void pbwlab_poly_free(pbwlab_poly* poly);
/* Degree, -1 for the zero polynomial, -2 on NULL. */
int64_t pbwlab_poly_degree(const pbwlab_poly* poly);
/* Coefficient of q^power as a decimal string ("0" beyond the degree). */
pbwlab_status pbwlab_poly_coeff(const pbwlab_poly* poly, size_t power, char** out);
/* 1/0, or -1 on NULL. */
int pbwlab_poly_equal(const pbwlab_poly* a, const pbwlab_poly* b);
/* Value at the integer q; decimal string. */
pbwlab_status pbwlab_poly_eval(const pbwlab_poly* poly, int64_t q, char** out);

/* ---- cells and Dellac configurations ----------------------------------- */

/* Number of admissible flag-cell collections (equals h_n); decimal string. */
pbwlab_status pbwlab_flag_collection_count(int n, char** out);

typedef struct pbwlab_dellac_set pbwlab_dellac_set;

pbwlab_status pbwlab_dellac_configs(int n, pbwlab_dellac_set** out);
void pbwlab_dellac_set_free(pbwlab_dellac_set* set);
/* Number of configurations, or -1 on NULL. */
int64_t pbwlab_dellac_set_size(const pbwlab_dellac_set* set);
/* The 2n boxes of one configuration, sorted by (column, row). */
pbwlab_status pbwlab_dellac_boxes(const pbwlab_dellac_set* set, size_t index,
                                  int64_t* columns, int64_t* rows, size_t len);
/* Inversion count of one configuration, or -1 on error. */
int64_t pbwlab_dellac_length(const pbwlab_dellac_set* set, size_t index);

/* ---- quiver representations -------------------------------------------- */

typedef struct pbwlab_rep pbwlab_rep;

typedef enum pbwlab_special_module {
    PBWLAB_MODULE_M0 = 0, /* n copies of the full interval */
    PBWLAB_MODULE_M1 = 1, /* path algebra plus dual: the PBW degenerate case */
    PBWLAB_MODULE_M2 = 2  /* deeper degeneration including all simples */
} pbwlab_special_module;

pbwlab_status pbwlab_rep_special(int n, pbwlab_special_module kind, pbwlab_rep** out);
void pbwlab_rep_free(pbwlab_rep* rep);
/* Rank parameter n, or -1 on NULL. */
int pbwlab_rep_rank_param(const pbwlab_rep* rep);
/* Dimension vector; len must be n-1. */
pbwlab_status pbwlab_rep_dim_vector(const pbwlab_rep* rep, int64_t* out, size_t len);
/* Multiplicity of the interval indecomposable U_{i,j}. */
pbwlab_status pbwlab_rep_multiplicity(const pbwlab_rep* rep, int i, int j, int64_t* out);
/* Rank r_{i,j} of the composed maps from vertex i to vertex j. */
pbwlab_status pbwlab_rep_rank(const pbwlab_rep* rep, int i, int j, int64_t* out);
/* 1 if `from` degenerates to `to` (rank dominance), else 0. */
pbwlab_status pbwlab_rep_degenerates_to(const pbwlab_rep* from, const pbwlab_rep* to,
                                        int* out);
/* Number of e-dimensional subrepresentations over F_p; decimal string. */
pbwlab_status pbwlab_rep_count_subreps_fq(const pbwlab_rep* rep, const int64_t* e,
                                          size_t e_len, int64_t p, char** out);
/* Euler form of the n-1 vertex equioriented type-A quiver. */
pbwlab_status pbwlab_euler_form(int n, const int64_t* e, const int64_t* d, size_t len,
                                int64_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PBWLAB_H */
