/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TML_H
#define TML_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TmlConnective {
  TML_CONNECTIVE_BOT = 0,
  TML_CONNECTIVE_TOP = 1,
  TML_CONNECTIVE_NEG = 2,
  TML_CONNECTIVE_BOX = 3,
  TML_CONNECTIVE_DIA = 4,
  TML_CONNECTIVE_AND = 5,
  TML_CONNECTIVE_OR = 6,
  TML_CONNECTIVE_SUCC = 7,
} TmlConnective;

/**
 * Result codes.
 */
typedef enum TmlStatus {
  TML_STATUS_OK = 0,
  TML_STATUS_NULL_POINTER = 1,
  TML_STATUS_INVALID_UTF8 = 2,
  TML_STATUS_PARSE_ERROR = 3,
  TML_STATUS_INVALID_ARGUMENT = 4,
  TML_STATUS_OUT_OF_SIGNATURE = 5,
  TML_STATUS_TOO_MANY_VARIABLES = 6,
  TML_STATUS_PROOF_REJECTED = 7,
  TML_STATUS_FORMAT_ERROR = 8,
  TML_STATUS_INTERNAL = 9,
  TML_STATUS_PANIC = 10,
} TmlStatus;

/**
 * Rule set for tableaux; also names the target language of translation.
 */
typedef enum TmlSystem {
  TML_SYSTEM_SUCC = 0,
  TML_SYSTEM_FULL = 1,
} TmlSystem;

/**
 * The four truth values in the order `0 < n < b < 1` of enumeration.
 */
typedef enum TmlValue {
  TML_VALUE_ZERO = 0,
  TML_VALUE_N = 1,
  TML_VALUE_B = 2,
  TML_VALUE_ONE = 3,
} TmlValue;

/**
 * An immutable parsed formula.
 */
typedef struct TmlFormula TmlFormula;

/**
 * The outcome of a tableau decision.
 */
typedef struct TmlVerdict TmlVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call into the library on this thread.
 */
const char *tml_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *tml_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tml_string_free(char *s);

/**
 * Parses `input` into a new formula handle stored in `*out`.
 *
 * # Safety
 * `input` must be NUL-terminated; `out` must be writable.
 */
enum TmlStatus tml_parse(const char *input, struct TmlFormula **out);

/**
 * Releases a formula handle. NULL is ignored.
 *
 * # Safety
 * `f` must come from this library and not have been freed.
 */
void tml_formula_free(struct TmlFormula *f);

/**
 * Canonical text of a formula, or NULL for a NULL handle.
 *
 * # Safety
 * `f` must be a live handle or NULL.
 */
char *tml_formula_render(const struct TmlFormula *f);

/**
 * Translates into the language of `to`, storing a new handle in `*out`.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum TmlStatus tml_translate(const struct TmlFormula *f,
                             enum TmlSystem to,
                             struct TmlFormula **out);

/**
 * Applies a connective to `n_args` values. `args` may be NULL when the
 * arity is 0.
 *
 * # Safety
 * `args` must point to `n_args` values; `out` must be writable.
 */
enum TmlStatus tml_apply_op(enum TmlConnective conn,
                            const enum TmlValue *args,
                            size_t n_args,
                            enum TmlValue *out);

/**
 * Evaluates under `assignment`, written `p=n,q=b`.
 *
 * # Safety
 * `f` must be a live handle; `assignment` NUL-terminated; `out` writable.
 */
enum TmlStatus tml_eval(const struct TmlFormula *f, const char *assignment, enum TmlValue *out);

/**
 * Exhaustive validity: `*out` is true iff every valuation gives 1.
 * When `countermodel` is non-NULL it receives the first failing
 * valuation as text, or NULL if valid.
 *
 * # Safety
 * `f` must be a live handle; `out` writable; `countermodel` NULL or writable.
 */
enum TmlStatus tml_valid(const struct TmlFormula *f, bool *out, char **countermodel);

/**
 * Decides validity by tableaux, or consequence from `n_premises`
 * premises when that is nonzero, storing a verdict handle in `*out`.
 *
 * # Safety
 * `f` must be a live handle; `premises` must point to `n_premises` live
 * handles; `out` must be writable.
 */
enum TmlStatus tml_prove(const struct TmlFormula *f,
                         const struct TmlFormula *const *premises,
                         size_t n_premises,
                         enum TmlSystem system,
                         struct TmlVerdict **out);

/**
 * Releases a verdict handle. NULL is ignored.
 *
 * # Safety
 * `v` must come from this library and not have been freed.
 */
void tml_verdict_free(struct TmlVerdict *v);

/**
 * True iff every branch closed. False for NULL.
 *
 * # Safety
 * `v` must be a live handle or NULL.
 */
bool tml_verdict_is_proved(const struct TmlVerdict *v);

/**
 * Countermodel read off the open branch as `{p: n}`, or NULL if proved.
 *
 * # Safety
 * `v` must be a live handle or NULL.
 */
char *tml_verdict_countermodel(const struct TmlVerdict *v);

/**
 * Value of `var` in the countermodel. Variables the model leaves
 * unconstrained read as 0.
 *
 * # Safety
 * `v` must be a live handle; `var` NUL-terminated; `out` writable.
 */
enum TmlStatus tml_verdict_value(const struct TmlVerdict *v, const char *var, enum TmlValue *out);

/**
 * Checks a proof in JSON form. On success `*judgement` receives
 * `Γ |- φ` with the open assumptions sorted.
 *
 * # Safety
 * `json` must be NUL-terminated; `judgement` NULL or writable.
 */
enum TmlStatus tml_nd_check(const char *json, char **judgement);

/**
 * Normalizes a proof in JSON form; `*out` receives the normal proof as
 * JSON.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be writable.
 */
enum TmlStatus tml_nd_normalize(const char *json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TML_H */
