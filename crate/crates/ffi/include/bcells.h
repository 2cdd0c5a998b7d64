#ifndef BCELLS_H
#define BCELLS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_POINTER = 1,
  BC_STATUS_INVALID_RANK = 2,
  BC_STATUS_INVALID_INPUT = 3,
  BC_STATUS_PARSE = 4,
  BC_STATUS_DOMAIN = 5,
  BC_STATUS_BUDGET = 6,
  BC_STATUS_REGIME = 7,
  BC_STATUS_BUFFER_TOO_SMALL = 8,
  BC_STATUS_INTERNAL = 9,
} BcStatus;

/**
 * A partition of `W_n` indexed by canonical enumeration order.
 */
typedef struct BcPartition BcPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Vogan classes of `W_n` for weights `L(t) = b`, `L(s_i) = a`; requires `b > (n-2)a`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_vogan_classes(uint32_t n, uint32_t a, uint32_t b, struct BcPartition **out);

/**
 * Right orbits of the group generated by the two cellular maps.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_xi_orbits(uint32_t n, uint32_t a, uint32_t b, struct BcPartition **out);

/**
 * Left cells from the Kazhdan-Lusztig basis; `max_rank` caps the work (at most 5).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum BcStatus bc_left_cells(uint32_t n,
                            uint32_t a,
                            uint32_t b,
                            uint32_t max_rank,
                            struct BcPartition **out);

/**
 * # Safety
 * `p` must be null or a live handle from this library.
 */
size_t bc_partition_len(const struct BcPartition *p);

/**
 * # Safety
 * `p` must be null or a live handle from this library.
 */
size_t bc_partition_num_classes(const struct BcPartition *p);

/**
 * # Safety
 * `p` must be null or a live handle; `out` must be valid for writes.
 */
enum BcStatus bc_partition_class_of(const struct BcPartition *p, size_t index, uint32_t *out);

/**
 * Copies all class labels into `buf`, which must hold `bc_partition_len` entries.
 *
 * # Safety
 * `p` must be null or a live handle; `buf` must be valid for `cap` writes.
 */
enum BcStatus bc_partition_labels(const struct BcPartition *p, uint32_t *buf, size_t cap);

/**
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void bc_partition_free(struct BcPartition *p);

/**
 * Canonical index of the element with window `window[0..n]`.
 *
 * # Safety
 * `window` must be valid for `n` reads and `out` for writes.
 */
enum BcStatus bc_element_index(const int8_t *window, size_t n, size_t *out);

/**
 * Writes the window of the element at `index` into `buf[0..n]`.
 *
 * # Safety
 * `buf` must be valid for `cap` writes.
 */
enum BcStatus bc_element_window(uint32_t n, size_t index, int8_t *buf, size_t cap);

/**
 * Message for the last failure on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *bc_last_error(void);

const char *bc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCELLS_H */
