/* C API of the angular Calogero-Moser library.
 *
 * Opaque session handles carry the run configuration and the last error
 * message; every call returns a status code. String results are allocated by
 * the library and must be released with angcm_string_free().
 */
#ifndef ANGCM_H
#define ANGCM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct angcm_session angcm_session;

typedef enum {
    ANGCM_OK = 0,
    ANGCM_ERROR = 1,        /* internal failure */
    ANGCM_USAGE = 2,        /* bad option or argument */
    ANGCM_VERIFY_FAILED = 3 /* an exact identity did not hold */
} angcm_status;

const char* angcm_version(void);

/* Sessions start from the defaults (n=3, g=1, omega=1, variant=angular,
 * max-level=6, format=text); the cache directory defaults to the
 * ANGCM_CACHE_DIR environment variable when set. */
angcm_session* angcm_session_new(void);
void angcm_session_free(angcm_session* s);

/* Message of the last failing call on this session, empty if none. */
const char* angcm_last_error(const angcm_session* s);

/* Options: n, g, omega, variant (full|relative|angular|relative-angular),
 * max-level, root-system (A2|B3|D4|I2(5)), multiplicities (comma list),
 * spin-flavors, format (text|json), cache-dir, trust-cache (0|1), seed. */
angcm_status angcm_set_option(angcm_session* s, const char* key, const char* value);

/* Spectrum table up to max-level. */
angcm_status angcm_spectrum(angcm_session* s, char** out);

/* Eigenfunction for the multi-index k given as a comma list, e.g. "2,0,0". */
angcm_status angcm_eigenfunction(angcm_session* s, const char* k_csv, char** out);

/* SU(s) spin content of level m. */
angcm_status angcm_spin(angcm_session* s, long m, char** out);

/* Runs the named verification suites (comma list, empty or NULL for all);
 * returns ANGCM_VERIFY_FAILED if any exact identity fails. */
angcm_status angcm_verify(angcm_session* s, const char* checks_csv, char** out);

void angcm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ANGCM_H */
