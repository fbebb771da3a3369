#ifndef UNILINEAR_H
#define UNILINEAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every entry point.
 */
typedef enum UlStatus {
  UL_STATUS_OK = 0,
  UL_STATUS_NULL_POINTER = 1,
  UL_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed algebra file or signature text.
   */
  UL_STATUS_SYNTAX = 3,
  /**
   * The file is well formed but breaks a residuated-lattice law.
   */
  UL_STATUS_SEMANTIC = 4,
  /**
   * An element index outside the carrier.
   */
  UL_STATUS_OUT_OF_RANGE = 5,
  /**
   * A construction or analysis precondition failed.
   */
  UL_STATUS_FAILED = 6,
  UL_STATUS_PANIC = 7,
} UlStatus;

/**
 * Which binary operation [`ul_algebra_op`] evaluates.
 */
typedef enum UlOp {
  UL_OP_MEET = 0,
  UL_OP_JOIN = 1,
  UL_OP_MUL = 2,
  /**
   * `x\y`
   */
  UL_OP_LDIV = 3,
  /**
   * `x/y`
   */
  UL_OP_RDIV = 4,
} UlOp;

/**
 * Opaque algebra handle.
 */
typedef struct UlAlgebra UlAlgebra;

/**
 * Mirrors the unilinearity flags of an algebra.
 */
typedef struct UlFlags {
  bool is_unilinear;
  bool is_linear;
  bool top_central;
  bool top_unital;
  bool rigorously_compact;
  bool compact;
  size_t height;
  size_t width;
} UlFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Valid until the next call.
 */
const char *ul_last_error(void);

/**
 * Parses an algebra file (text or JSON) and checks every law.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum UlStatus ul_algebra_parse(const char *src, struct UlAlgebra **out);

/**
 * Renders an algebra in the text format.
 *
 * # Safety
 * `a` must be a live handle; `out` receives a string owned by the caller.
 */
enum UlStatus ul_algebra_render(const struct UlAlgebra *a, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void ul_string_free(char *s);

/**
 * # Safety
 * `a` must come from this library or be null, and not be used afterwards.
 */
void ul_algebra_free(struct UlAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_size(const struct UlAlgebra *a, size_t *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_op(const struct UlAlgebra *a,
                            enum UlOp op,
                            size_t x,
                            size_t y,
                            size_t *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_leq(const struct UlAlgebra *a, size_t x, size_t y, bool *out);

/**
 * Whether every residuated-lattice law holds.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_check(const struct UlAlgebra *a, bool *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_flags(const struct UlAlgebra *a, struct UlFlags *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum UlStatus ul_algebra_is_discriminator(const struct UlAlgebra *a, bool *out);

/**
 * `M_G` for the abelian group with the given invariant factors.
 *
 * # Safety
 * `factors_ptr` must point to `len` values (or be null with `len` 0).
 */
enum UlStatus ul_make_mg(const uint64_t *factors_ptr, size_t len, struct UlAlgebra **out);

/**
 * `R_{A,B}` with `A = G ∪ {⊤}` and the zero-semigroup kind `0..=3`.
 *
 * # Safety
 * As for [`ul_make_mg`].
 */
enum UlStatus ul_make_rab(const uint64_t *factors_ptr,
                          size_t len,
                          uint8_t kind,
                          struct UlAlgebra **out);

/**
 * Cyclic-monoid URL; `down` selects the dual middle order.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum UlStatus ul_make_cyclic(size_t r, size_t s, bool down, struct UlAlgebra **out);

/**
 * Number of residuated lattices on `M_X`, `|X| = x_size`, up to isomorphism.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum UlStatus ul_enumerate_count(size_t x_size, size_t *out);

/**
 * Largest exponent in a signature such as `(1; p2:[2,1])`.
 *
 * # Safety
 * `s` must be a NUL-terminated string and `out` a valid pointer.
 */
enum UlStatus ul_sig_exp(const char *s, uint32_t *out);

/**
 * Whether the first group embeds in the second.
 *
 * # Safety
 * Both strings must be NUL-terminated and `out` a valid pointer.
 */
enum UlStatus ul_sig_leq(const char *a, const char *b, bool *out);

/**
 * Join of two signatures, as text owned by the caller.
 *
 * # Safety
 * Both strings must be NUL-terminated and `out` a valid pointer.
 */
enum UlStatus ul_sig_join(const char *a, const char *b, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNILINEAR_H */
