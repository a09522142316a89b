#ifndef ASSOCGEOM_H
#define ASSOCGEOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asg_status {
  ASG_OK = 0,
  ASG_ERR_MISMATCH = 1,  /* ambient dimension or field disagreement */
  ASG_ERR_DOMAIN = 2,    /* operation undefined at these arguments */
  ASG_ERR_GUARD = 3,     /* enumeration size guard exceeded */
  ASG_ERR_PARSE = 4,     /* malformed text input; message carries the line number */
  ASG_ERR_INVALID_ARGUMENT = 5,
  ASG_ERR_INTERNAL = 6
} asg_status;

typedef enum asg_gamma_form {
  ASG_GAMMA_EXTENDED = 0,
  ASG_GAMMA_OPERATOR = 1,   /* needs the quintuple in D_L, D_R or D_M */
  ASG_GAMMA_BRUTEFORCE = 2  /* prime fields, p^n <= 2^16 */
} asg_gamma_form;

typedef struct asg_subspace asg_subspace;
typedef struct asg_relation asg_relation;
typedef struct asg_pair asg_pair;
typedef struct asg_report asg_report;

/* Message of the last failed call on this thread; empty after success. */
const char* asg_last_error(void);
const char* asg_status_name(asg_status status);
/* Releases any string returned through a char** out parameter. */
void asg_string_free(char* s);

/* Subspaces, in the block text format. */
asg_status asg_subspace_parse(const char* text, asg_subspace** out);
asg_status asg_subspace_format(const asg_subspace* s, char** out);
asg_status asg_subspace_format_line(const asg_subspace* s, char** out);
size_t asg_subspace_dim(const asg_subspace* s);
size_t asg_subspace_ambient(const asg_subspace* s);
int asg_subspace_equal(const asg_subspace* s, const asg_subspace* t);
void asg_subspace_free(asg_subspace* s);

/* Reads the five labeled blocks [x] [a] [y] [b] [z]; out must hold five handles. */
asg_status asg_quintuple_parse(const char* text, asg_subspace** out);
asg_status asg_gamma(const asg_subspace* x, const asg_subspace* a, const asg_subspace* y, const asg_subspace* b,
                     const asg_subspace* z, asg_gamma_form form, asg_subspace** out);
/* Π_r(x,a,z); r is a field element in text ("3", "-1/2"). */
asg_status asg_pi(const char* r, const asg_subspace* x, const asg_subspace* a, const asg_subspace* z,
                  asg_subspace** out);

/* All subspaces of F^n (dim < 0) or those of one dimension, one line each, sorted. */
asg_status asg_enumerate(const char* field, size_t n, long dim, char** out);

/* Multiplication table of U_ab with the given unit. */
asg_status asg_group_table(const asg_subspace* a, const asg_subspace* b, const asg_subspace* unit, char** out);

/* Relations, as "relation n m" plus a graph block. */
asg_status asg_relation_parse(const char* text, asg_relation** out);
asg_status asg_relation_format(const asg_relation* r, char** out);
void asg_relation_free(asg_relation* r);
/* s ∘ r */
asg_status asg_relation_compose(const asg_relation* s, const asg_relation* r, asg_relation** out);
asg_status asg_relation_reverse(const asg_relation* r, asg_relation** out);
/* z ∘ y⁻¹ ∘ x */
asg_status asg_relation_semitorsor(const asg_relation* x, const asg_relation* y, const asg_relation* z,
                                   asg_relation** out);
asg_status asg_relation_pushforward(const asg_relation* r, const asg_subspace* x, asg_subspace** out);
asg_status asg_relation_pullback(const asg_relation* r, const asg_subspace* y, asg_subspace** out);

/* Associative pairs by structure constants. */
asg_status asg_pair_parse(const char* text, asg_pair** out);
asg_status asg_pair_format(const asg_pair* p, char** out);
void asg_pair_free(asg_pair* p);
/* (Hom(E,F), Hom(F,E)) with dim E = e, dim F = f. */
asg_status asg_pair_hom(const char* field, size_t e, size_t f, asg_pair** out);
/* The pair of the geometry at the base point (o⁺, o⁻). */
asg_status asg_pair_extract(const asg_subspace* o_plus, const asg_subspace* o_minus, asg_pair** out);
/* Samples para-associativity; *passed is 1 or 0 and *witness (may be NULL) gets the first failure. */
asg_status asg_pair_check(const asg_pair* p, uint64_t seed, size_t budget, int* passed, char** witness);
/* Structure constants of U_c with origin a and unit u. */
asg_status asg_algebra_extract(const asg_subspace* a, const asg_subspace* u, const asg_subspace* c, char** out);
/* End(E ⊕ F) with its idempotent, Peirce block dimensions and the pair (A01, A10). */
asg_status asg_imbed_hom(const char* field, size_t e, size_t f, char** out);
/* Right ideals of End(E ⊕ F), the pair read off them, and whether it matches the Hom pair up to swapping ±. */
asg_status asg_round_trip(const char* field, size_t e, size_t f, int* isomorphic, char** out);

typedef struct asg_run_config {
  const char* field; /* "p=<prime>" or "q" */
  size_t n;
  uint64_t seed;
  size_t budget;
  int exhaustive;
  int corrupt;
} asg_run_config;

/* suite is one of asg_suite_name(i), or "all". */
asg_status asg_verify(const char* suite, const asg_run_config* config, asg_report** out);
size_t asg_suite_count(void);
const char* asg_suite_name(size_t i);
int asg_report_passed(const asg_report* r);
asg_status asg_report_text(const asg_report* r, char** out);
asg_status asg_report_json(const asg_report* r, char** out);
void asg_report_free(asg_report* r);

#ifdef __cplusplus
}
#endif

#endif
