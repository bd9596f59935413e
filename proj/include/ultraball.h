/* C API for the ultraball library: finite ultrametric spaces, representing
 * trees, balleans under the Hausdorff metric, laminar family validation and
 * isometry decisions.
 *
 * All functions return UB_OK on success. On failure the return code tells
 * the class of error and ub_last_error() returns a thread-local JSON
 * document {"code": "...", "message": "...", "witness": ...?}.
 *
 * Strings produced through char** outputs are heap-allocated; release them
 * with ub_free_str(). Handles are released with the matching *_free().
 * Distances in all documents are exact decimal or fraction strings.
 */
#ifndef ULTRABALL_H
#define ULTRABALL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  UB_OK = 0,
  UB_ERR_DOMAIN = 1,  /* valid input, operation not defined on it */
  UB_ERR_PARSE = 2,   /* malformed JSON or schema mismatch */
  UB_ERR_INVALID = 3, /* null handle / bad argument */
  UB_ERR_INTERNAL = 4
} ub_status;

typedef struct ub_space ub_space;
typedef struct ub_tree ub_tree;
typedef struct ub_family ub_family;

const char *ub_version(void);
const char *ub_last_error(void);
void ub_free_str(char *s);

/* --- spaces ------------------------------------------------------------ */

ub_status ub_space_parse(const char *json, ub_space **out);
void ub_space_free(ub_space *s);
ub_status ub_space_to_json(const ub_space *s, char **out);
int ub_space_point_count(const ub_space *s);

/* Metric / strong-triangle report with concrete witnesses on failure. */
ub_status ub_space_validate(const ub_space *s, char **report_json);

/* subset_json: JSON array of point names. */
ub_status ub_space_diam(const ub_space *s, const char *subset_json,
                        char **dist);
ub_status ub_space_closed_ball(const ub_space *s, const char *center,
                               const char *radius, char **ball_json);
ub_status ub_space_enclosing_ball(const ub_space *s, const char *subset_json,
                                  char **ball_json);

/* Hausdorff distance between two nonempty subsets (not necessarily balls). */
ub_status ub_space_hausdorff(const ub_space *s, const char *a_json,
                             const char *b_json, char **dist);

/* Ballean document: base space, all balls with ids, Hausdorff matrix. */
ub_status ub_space_ballean(const ub_space *s, char **ballean_json);
ub_status ub_space_ballean_check(const ub_space *s, char **report_json);

/* n-fold ballean iteration (n = 0 copies the space). */
ub_status ub_space_iterate(const ub_space *s, int n, ub_space **out);
ub_status ub_space_stats(const ub_space *s, char **stats_json);

ub_status ub_space_family(const ub_space *s, char **family_json);
ub_status ub_space_isometric(const ub_space *a, const ub_space *b, int *flag);
ub_status ub_space_rep_tree(const ub_space *s, ub_tree **out);

/* --- labeled rooted trees ---------------------------------------------- */

ub_status ub_tree_parse(const char *json, ub_tree **out);
void ub_tree_free(ub_tree *t);
ub_status ub_tree_to_json(const ub_tree *t, char **out);
ub_status ub_tree_to_dot(const ub_tree *t, char **out);
ub_status ub_tree_distance(const ub_tree *t, const char *x, const char *y,
                           char **dist);

/* Realizability report for the given n (n = 0: representing-tree check). */
ub_status ub_tree_check(const ub_tree *t, int n, char **report_json);
ub_status ub_tree_to_space(const ub_tree *t, ub_space **out);

/* Add one fresh leaf to every internal vertex; unlabeled result. */
ub_status ub_tree_add_leaves_json(const ub_tree *t, char **out);
ub_status ub_tree_add_leaves_dot(const ub_tree *t, char **out);

ub_status ub_tree_canonical(const ub_tree *t, int labeled, char **encoding,
                            char **digest);
ub_status ub_tree_isomorphic(const ub_tree *a, const ub_tree *b, int labeled,
                             int *flag);

/* --- set families ------------------------------------------------------ */

ub_status ub_family_parse(const char *json, ub_family **out);
void ub_family_free(ub_family *f);
ub_status ub_family_validate(const ub_family *f, char **report_json);
ub_status ub_family_reconstruct(const ub_family *f, ub_space **out);

/* --- generation --------------------------------------------------------- */

/* Random ultrametric space with `leaves` points. labels_csv may be NULL or
 * a comma-separated positive label set (e.g. "4,2,1/2"). Reproducible
 * byte-for-byte for a fixed seed. */
ub_status ub_gen_space(int leaves, const char *labels_csv, uint64_t seed,
                       ub_space **out);

#ifdef __cplusplus
}
#endif

#endif /* ULTRABALL_H */
