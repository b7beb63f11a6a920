#ifndef SHELLAB_H
#define SHELLAB_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Status codes returned by every function.
 */
typedef enum ShellabStatus {
  /*
   Success.
   */
  SHELLAB_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  SHELLAB_STATUS_NULL_POINTER = 1,
  /*
   A string argument was not valid UTF-8.
   */
  SHELLAB_STATUS_INVALID_UTF8 = 2,
  /*
   Malformed JSON input.
   */
  SHELLAB_STATUS_PARSE_ERROR = 3,
  /*
   The input was well-formed but rejected (bad poset, missing label, ...).
   */
  SHELLAB_STATUS_INVALID_INPUT = 4,
  /*
   Unknown fixture name.
   */
  SHELLAB_STATUS_UNKNOWN_FIXTURE = 5,
  /*
   An internal panic was caught at the boundary.
   */
  SHELLAB_STATUS_PANIC = 6,
} ShellabStatus;

/*
 The maximal chain descent order of a labeled poset.
 */
typedef struct ShellabCord ShellabCord;

/*
 A poset with an EL- or CL-labeling.
 */
typedef struct ShellabLabeledPoset ShellabLabeledPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a labeled poset JSON document.

 # Safety
 `json` must be a valid NUL-terminated string and `out` a valid pointer.
 The handle written to `out` must be released with
 [`shellab_labeled_poset_free`].
 */
enum ShellabStatus shellab_labeled_poset_from_json(const char *json,
                                                   struct ShellabLabeledPoset **out);

/*
 Loads a built-in figure fixture by name.

 # Safety
 `name` must be a valid NUL-terminated string and `out` a valid pointer.
 The handle written to `out` must be released with
 [`shellab_labeled_poset_free`].
 */
enum ShellabStatus shellab_fixture(const char *name, struct ShellabLabeledPoset **out);

/*
 Releases a labeled poset handle. Null is ignored.

 # Safety
 `p` must be null or a handle returned by this library that has not been
 freed.
 */
void shellab_labeled_poset_free(struct ShellabLabeledPoset *p);

/*
 Number of elements of the poset.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_labeled_poset_len(const struct ShellabLabeledPoset *p, uintptr_t *out);

/*
 Checks the EL or CL axioms (the kind declared by the document).

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_validate(const struct ShellabLabeledPoset *p, bool *out);

/*
 Decides the polygon strong condition.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_polygon_strong(const struct ShellabLabeledPoset *p, bool *out);

/*
 Builds the maximal chain descent order.

 # Safety
 `p` must be a live handle and `out` a valid pointer. The handle written
 to `out` must be released with [`shellab_cord_free`].
 */
enum ShellabStatus shellab_cord_build(const struct ShellabLabeledPoset *p,
                                      struct ShellabCord **out);

/*
 Releases a Cord handle. Null is ignored.

 # Safety
 `c` must be null or a handle returned by this library that has not been
 freed.
 */
void shellab_cord_free(struct ShellabCord *c);

/*
 Number of maximal chains.

 # Safety
 `c` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_cord_len(const struct ShellabCord *c, uintptr_t *out);

/*
 Number of cover relations.

 # Safety
 `c` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_cord_cover_count(const struct ShellabCord *c, uintptr_t *out);

/*
 Whether every polygon move is a cover relation.

 # Safety
 `c` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_cord_is_polygon_complete(const struct ShellabCord *c, bool *out);

/*
 Whether every polygon move adds exactly one inversion.

 # Safety
 `c` must be a live handle and `out` a valid pointer.
 */
enum ShellabStatus shellab_cord_is_inversion_ranked(const struct ShellabCord *c, bool *out);

/*
 JSON description of Cord (chains, moves, covers).

 # Safety
 `c` must be a live handle and `out` a valid pointer. The string written
 to `out` must be released with [`shellab_string_free`].
 */
enum ShellabStatus shellab_cord_to_json(const struct ShellabCord *c, char **out);

/*
 Hasse diagram of Cord in DOT.

 # Safety
 `c` must be a live handle and `out` a valid pointer. The string written
 to `out` must be released with [`shellab_string_free`].
 */
enum ShellabStatus shellab_cord_to_dot(const struct ShellabCord *c, char **out);

/*
 Copy of the calling thread's last error message, or null when there is
 none.

 # Safety
 The returned string must be released with [`shellab_string_free`].
 */
char *shellab_last_error_message(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string returned by this library that has not been
 freed.
 */
void shellab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHELLAB_H */
