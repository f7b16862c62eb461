#ifndef MATROIDCHARSET_H
#define MATROIDCHARSET_H

/* C interface to the matroid characteristic set toolkit. Commands mirror
 * the mcs CLI verbs; results come back as JSON envelopes with a stable
 * schema_version, inspected through an opaque handle. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MCS_API __declspec(dllexport)
#else
#define MCS_API __attribute__((visibility("default")))
#endif

typedef struct mcs_result mcs_result;

/* Runs one command. argv holds the arguments only, without a program name,
 * e.g. {"density", "theoretical", "--moduli", "3,5"}. Returns NULL only on
 * allocation failure; every other outcome, including parse errors, is a
 * result handle. */
MCS_API mcs_result* mcs_run(int argc, const char* const* argv);

/* Text for standard output: the JSON result envelope (newline terminated),
 * plain help text for --help, or empty when --out wrote the envelope to a
 * file. Owned by the handle; valid until mcs_result_free. */
MCS_API const char* mcs_result_json(const mcs_result* r);

/* "ok", "violation-report" or "error". */
MCS_API const char* mcs_result_status(const mcs_result* r);

/* Process exit code for the command: 0 ok, 1 domain error or failed
 * verification, 2 unknown verb or malformed input. */
MCS_API int mcs_result_exit_code(const mcs_result* r);

MCS_API void mcs_result_free(mcs_result* r);

/* Library version as "major.minor.patch". */
MCS_API const char* mcs_version(void);

#ifdef __cplusplus
}
#endif

#endif
