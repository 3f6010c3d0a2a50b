/*
 * cscbif - degeneracy instants, Morse index jumps and bifurcation
 * classification for product families g_lambda = g0 + lambda*g1 of constant
 * scalar curvature metrics, from exact spectral data of the two factors.
 *
 * C API: opaque handles, status codes, strings owned by the library.
 * Rationals cross this boundary as "p/q" strings (lowest terms, q > 0).
 * Thread safety: handles are immutable after construction except for
 * cscbif_spectrum_set_harmonically_free; the last-error message is
 * thread-local.
 */

#ifndef CSCBIF_H
#define CSCBIF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cscbif_spectrum cscbif_spectrum;
typedef struct cscbif_family cscbif_family;

typedef enum cscbif_status {
    CSCBIF_OK = 0,
    CSCBIF_ERROR_INVALID_ARGUMENT = 1,
    CSCBIF_ERROR_PARSE = 2,
    CSCBIF_ERROR_VALIDATION = 3,
    CSCBIF_ERROR_DIMENSION = 4,
    CSCBIF_ERROR_DEGENERATE_PAIR = 5,
    CSCBIF_ERROR_INSUFFICIENT_TRUNCATION = 6,
    CSCBIF_ERROR_MISSING_VOLUME = 7,
    CSCBIF_ERROR_INDEX_RANGE = 8,
    CSCBIF_ERROR_AT_INSTANT = 9,
    CSCBIF_ERROR_UNKNOWN_CATALOG = 10,
    CSCBIF_ERROR_IO = 11,
    CSCBIF_ERROR_INTERNAL = 12
} cscbif_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* cscbif_last_error(void);

/* --- factor spectra --------------------------------------------------- */

/* Unit-radius round sphere S^n, n >= 2, with `count` eigenvalues. */
cscbif_status cscbif_spectrum_sphere(int n, int count, cscbif_spectrum** out);

/* Real projective space RP^n (even-degree sphere spectrum, half volume). */
cscbif_status cscbif_spectrum_projective(int n, int count, cscbif_spectrum** out);

/* Parse and validate a spectrum from its JSON document. */
cscbif_status cscbif_spectrum_from_json(const char* json_text, cscbif_spectrum** out);

/* Serialize back to the spectrum file schema. */
cscbif_status cscbif_spectrum_to_json(const cscbif_spectrum* spectrum, char** out_json);

cscbif_status cscbif_spectrum_set_harmonically_free(cscbif_spectrum* spectrum, int value);

void cscbif_spectrum_free(cscbif_spectrum* spectrum);

/* --- product family ---------------------------------------------------- */

cscbif_status cscbif_family_new(const cscbif_spectrum* factor0, const cscbif_spectrum* factor1,
                                cscbif_family** out);

void cscbif_family_free(cscbif_family* family);

/* kappa_lambda = kappa0 + kappa1/lambda, exact "p/q". */
cscbif_status cscbif_scalar_curvature(const cscbif_family* family, const char* lambda,
                                      char** out);

/* Jacobi eigenvalue branch sigma_{i,j}(lambda), exact "p/q". */
cscbif_status cscbif_branch_eval(const cscbif_family* family, int i, int j, const char* lambda,
                                 char** out);

/* Negative Jacobi eigenvalue count at lambda (not an instant). */
cscbif_status cscbif_morse_index(const cscbif_family* family, const char* lambda,
                                 long long* out);

/* --- analysis ----------------------------------------------------------- */

/* Full analysis over the window [lo, hi] as a JSON report. Set
 * with_obstruction to add Yamabe certificates at instants and interval
 * midpoints (requires volume data on both factors). */
cscbif_status cscbif_analyze_json(const cscbif_family* family, const char* lo, const char* hi,
                                  int with_obstruction, char** out_json);

/* Branch diagram samples as CSV: lambda,i,j,sigma,multiplicity. */
cscbif_status cscbif_diagram_csv(const cscbif_family* family, const char* lo, const char* hi,
                                 int samples, int branch_cap, char** out_csv);

/* Closed-form i-th instant of S^n x S^n in (0, 1], exact "p/q". */
cscbif_status cscbif_sphere_instant(int n, int i, char** out);

/* Free any string returned through an out parameter. */
void cscbif_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CSCBIF_H */
