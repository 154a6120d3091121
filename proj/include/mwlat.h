/* C interface to the Mordell-Weil lattice library.
 *
 * All computation is exact; inputs and outputs are UTF-8 JSON strings in the
 * curve-spec format (version 1). Every function returns a status code:
 *   0  success
 *   1  verification failure (a check or certificate did not hold)
 *   2  input error (parse/validation)
 * On nonzero status, mwlat_last_error() / mwlat_last_error_code() describe
 * the failure for the calling thread. Strings returned through out-params
 * are owned by the caller and must be released with mwlat_string_free().
 */
#ifndef MWLAT_H
#define MWLAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mwlat_session mwlat_session;

#define MWLAT_OK 0
#define MWLAT_VERIFY_FAILED 1
#define MWLAT_INPUT_ERROR 2

/* Parse and validate a curve-spec; the session owns the parsed state. */
int mwlat_session_open(const char* spec_json, mwlat_session** out_session);

/* Open a session on one of the built-in golden specs ("5.1a", "5.1b", "5.2", "5.3"). */
int mwlat_session_open_builtin(const char* example_id, mwlat_session** out_session);

void mwlat_session_close(mwlat_session* s);

/* Singular-fiber report: places, Kodaira types, orders, component tallies. */
int mwlat_fibers(mwlat_session* s, char** out_json);

/* Gram matrix over the named basis, heights/torsion of basis and targets,
 * and the decomposition of each target. Names are comma-separated. */
int mwlat_mw(mwlat_session* s, const char* basis_csv, const char* targets_csv, char** out_json);

/* Contact-conic certificate from a named point, a slope polynomial r(t)
 * (JSON poly literal) and a free parameter b (JSON element literal or null). */
int mwlat_conic(mwlat_session* s, const char* point_name, const char* r_poly_json,
                const char* b_literal_json, char** out_json);

/* Run the clause-by-clause combinatorics validator for the given kind
 * ("1a", "1b", "2", "3a", "3b") against the spec's arrangement. */
int mwlat_verify(mwlat_session* s, const char* kind, char** out_json);

/* Re-run every golden check of a built-in example; status 1 when any fails. */
int mwlat_reproduce(const char* example_id, char** out_json);

/* Newline-separated ids of the built-in examples. */
int mwlat_builtin_ids(char** out_json);

const char* mwlat_last_error(void);      /* human-readable message, thread-local */
const char* mwlat_last_error_code(void); /* machine-readable code, thread-local */

void mwlat_string_free(char* s);
const char* mwlat_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MWLAT_H */
