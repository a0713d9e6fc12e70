#ifndef BQSYM_H
#define BQSYM_H

/* This file is generated by cbindgen from bqsym-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum BqsymStatus {
  BQSYM_STATUS_OK = 0,
  // A required pointer argument was NULL.
  BQSYM_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  BQSYM_STATUS_INVALID_UTF8 = 2,
  // The expression or index failed to parse.
  BQSYM_STATUS_PARSE_ERROR = 3,
  // The operation rejected its input (degree mismatch, x0-content in a
  // type A operation, invalid peak set, ...).
  BQSYM_STATUS_DOMAIN_ERROR = 4,
  // A verification sweep reported a failing identity.
  BQSYM_STATUS_VERIFY_FAILED = 5,
} BqsymStatus;

// Antipode selector.
typedef enum BqsymAntipode {
  BQSYM_ANTIPODE_TYPE_A = 0,
  BQSYM_ANTIPODE_TYPE_B = 1,
  BQSYM_ANTIPODE_RECURSIVE = 2,
} BqsymAntipode;

// Peak-function flavor selector.
typedef enum BqsymFlavor {
  BQSYM_FLAVOR_TYPE_A = 0,
  BQSYM_FLAVOR_TYPE_B = 1,
} BqsymFlavor;

// Coproduct selector.
typedef enum BqsymCoproduct {
  BQSYM_COPRODUCT_TYPE_A = 0,
  BQSYM_COPRODUCT_TYPE_B = 1,
  BQSYM_COPRODUCT_CHOW = 2,
} BqsymCoproduct;

// Opaque handle to an element.
typedef struct BqsymElement BqsymElement;

// Opaque handle to a tensor (a coproduct value).
typedef struct BqsymTensor BqsymTensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Description of the most recent error on this thread. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *bqsym_last_error_message(void);

// Parse an element expression such as `"3*M[2,1] - F[0,1,1]"`.
//
// # Safety
// `text` must point to a NUL-terminated string; `out` must be a valid
// location to store the new handle. The handle must be released with
// [`bqsym_element_free`].
enum BqsymStatus bqsym_element_parse(const char *text, struct BqsymElement **out);

// Release an element handle. NULL is ignored.
//
// # Safety
// `handle` must have been returned by this library and not yet freed.
void bqsym_element_free(struct BqsymElement *handle);

// Release a tensor handle. NULL is ignored.
//
// # Safety
// `handle` must have been returned by this library and not yet freed.
void bqsym_tensor_free(struct BqsymTensor *handle);

// Release a string returned by this library. NULL is ignored.
//
// # Safety
// `text` must have been returned by this library and not yet freed.
void bqsym_string_free(char *text);

// Rewrite in the monomial basis.
//
// # Safety
// `element` must be a live handle and `out` a valid result location.
enum BqsymStatus bqsym_element_to_monomial(const struct BqsymElement *element,
                                           struct BqsymElement **out);

// Rewrite in the fundamental basis.
//
// # Safety
// `element` must be a live handle and `out` a valid result location.
enum BqsymStatus bqsym_element_to_fundamental(const struct BqsymElement *element,
                                              struct BqsymElement **out);

// Apply an antipode.
//
// # Safety
// `element` must be a live handle and `out` a valid result location.
enum BqsymStatus bqsym_element_antipode(const struct BqsymElement *element,
                                        enum BqsymAntipode variant,
                                        struct BqsymElement **out);

// Apply the theta projection onto the peak span (type B flavor accepts
// everything; type A requires a first-part-0 element).
//
// # Safety
// `element` must be a live handle and `out` a valid result location.
enum BqsymStatus bqsym_element_theta(const struct BqsymElement *element,
                                     enum BqsymFlavor flavor,
                                     struct BqsymElement **out);

// Apply a coproduct, producing a tensor handle.
//
// # Safety
// `element` must be a live handle and `out` a valid location for the tensor
// handle, to be released with [`bqsym_tensor_free`].
enum BqsymStatus bqsym_element_coproduct(const struct BqsymElement *element,
                                         enum BqsymCoproduct variant,
                                         struct BqsymTensor **out);

// Expand the peak function of an index given as an array of parts.
//
// # Safety
// `parts` must point to `len` readable `uint32_t`s (or be NULL when `len`
// is 0); `out` must be a valid result location.
enum BqsymStatus bqsym_k_function(const uint32_t *parts,
                                  size_t len,
                                  enum BqsymFlavor flavor,
                                  struct BqsymElement **out);

// Semantic equality (both sides compared in the monomial basis). Writes 1
// or 0 through `out`.
//
// # Safety
// `left` and `right` must be live handles and `out` a valid `int` location.
enum BqsymStatus bqsym_element_equals(const struct BqsymElement *left,
                                      const struct BqsymElement *right,
                                      int32_t *out);

// The constant term, as a decimal string.
//
// # Safety
// `element` must be a live handle; `out` receives a string to be released
// with [`bqsym_string_free`].
enum BqsymStatus bqsym_element_counit(const struct BqsymElement *element, char **out);

// Render an element as text (`as_json` = 0) or canonical JSON
// (`as_json` != 0).
//
// # Safety
// `element` must be a live handle; `out` receives a string to be released
// with [`bqsym_string_free`].
enum BqsymStatus bqsym_element_format(const struct BqsymElement *element,
                                      int32_t as_json,
                                      char **out);

// Render a tensor as text or canonical JSON.
//
// # Safety
// `tensor` must be a live handle; `out` receives a string to be released
// with [`bqsym_string_free`].
enum BqsymStatus bqsym_tensor_format(const struct BqsymTensor *tensor, int32_t as_json, char **out);

// Run every identity sweep for degrees `0..=max_degree` and write the JSON
// report. Returns `Ok` when every check passes and `VerifyFailed`
// otherwise; the report is written in both cases.
//
// # Safety
// `report_out` may be NULL (the report is then discarded); otherwise it
// receives a string to be released with [`bqsym_string_free`].
enum BqsymStatus bqsym_verify(uint32_t max_degree, char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BQSYM_H */
