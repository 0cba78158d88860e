#ifndef PDEGEN_H
#define PDEGEN_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum PdegenStatus {
  PDEGEN_STATUS_OK = 0,
  /**
   * A pointer argument was null or a string was not valid UTF-8.
   */
  PDEGEN_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The specification text is not valid JSON of the expected shape.
   */
  PDEGEN_STATUS_PARSE_ERROR = 2,
  /**
   * The specification violates a cross-field validation rule.
   */
  PDEGEN_STATUS_VALIDATION_ERROR = 3,
  /**
   * A template failed to render.
   */
  PDEGEN_STATUS_TEMPLATE_ERROR = 4,
  /**
   * A filesystem operation failed.
   */
  PDEGEN_STATUS_IO_ERROR = 5,
  /**
   * A kernel or time-step failure during simulation.
   */
  PDEGEN_STATUS_RUNTIME_ERROR = 6,
  /**
   * No example application or compiled kernel set matches the project.
   */
  PDEGEN_STATUS_UNKNOWN_PROJECT = 7,
} PdegenStatus;

/**
 * Opaque simulation state: a mesh plus the bound kernels, advanced one
 * step at a time.
 */
typedef struct PdegenSim PdegenSim;

/**
 * Opaque parsed specification.
 */
typedef struct PdegenSpec PdegenSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the most recent failing call on this thread. Never
 * null; empty before the first failure. The pointer is invalidated by
 * the next failing call on the same thread.
 */
const char *pdegen_last_error(void);

/**
 * Parse and validate a specification from JSON text. On success writes
 * a new handle to `out`; free it with [`pdegen_spec_free`].
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PdegenStatus pdegen_spec_parse(const char *json, struct PdegenSpec **out);

/**
 * Validate an already-parsed specification. Returns `Ok` or
 * `ValidationError` with the joined per-path messages in
 * [`pdegen_last_error`].
 *
 * # Safety
 * `spec` must be a live handle from [`pdegen_spec_parse`].
 */
enum PdegenStatus pdegen_spec_validate(const struct PdegenSpec *spec);

/**
 * The project name of a parsed specification. The pointer is owned by
 * the handle and valid until [`pdegen_spec_free`]. Returns null on a
 * null handle.
 *
 * # Safety
 * `spec` must be a live handle.
 */
const char *pdegen_spec_project_name(const struct PdegenSpec *spec);

/**
 * Release a specification handle. Null is a no-op.
 *
 * # Safety
 * `spec` must be null or a handle not yet freed.
 */
void pdegen_spec_free(struct PdegenSpec *spec);

/**
 * Generate the full kernel/glue tree for a specification under
 * `out_dir` (the manifest is written last as the completion marker).
 *
 * # Safety
 * `spec` must be a live handle and `out_dir` a NUL-terminated path.
 */
enum PdegenStatus pdegen_generate(const struct PdegenSpec *spec, const char *out_dir);

/**
 * Create a simulation for a specification. `use_generated` selects the
 * compiled-in generated kernels (the project must have a committed
 * tree); 0 selects the generic reference kernels.
 *
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PdegenStatus pdegen_sim_new(const struct PdegenSpec *spec,
                                 int32_t use_generated,
                                 struct PdegenSim **out);

/**
 * Advance the simulation one step (clamped so time never exceeds the
 * specification's end time). Sets `*done` to 1 once the end time is
 * reached.
 *
 * # Safety
 * `sim` must be a live handle; `done` may be null.
 */
enum PdegenStatus pdegen_sim_advance(struct PdegenSim *sim, int32_t *done);

/**
 * Current simulated time.
 *
 * # Safety
 * `sim` must be a live handle.
 */
double pdegen_sim_time(const struct PdegenSim *sim);

/**
 * Number of completed steps.
 *
 * # Safety
 * `sim` must be a live handle.
 */
uint64_t pdegen_sim_step(const struct PdegenSim *sim);

/**
 * Total number of degrees of freedom (all cells, nodes, variables).
 *
 * # Safety
 * `sim` must be a live handle.
 */
uintptr_t pdegen_sim_n_dofs(const struct PdegenSim *sim);

/**
 * Copy the flattened degrees of freedom (cell-major, then node-major,
 * then variable) into `buf`; `len` is the capacity of `buf` in
 * doubles and must be at least [`pdegen_sim_n_dofs`].
 *
 * # Safety
 * `sim` must be a live handle; `buf` must point to at least `len`
 * writable doubles.
 */
enum PdegenStatus pdegen_sim_state(const struct PdegenSim *sim, double *buf, uintptr_t len);

/**
 * Release a simulation handle. Null is a no-op.
 *
 * # Safety
 * `sim` must be null or a handle not yet freed.
 */
void pdegen_sim_free(struct PdegenSim *sim);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PDEGEN_H */
