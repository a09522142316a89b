/* Exercises the C interface from C. */
#include <stdio.h>
#include <string.h>

#include "assocgeom/assocgeom.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

static const char* line_x = "field p=3\nambient 2\n1 0\n";
static const char* line_a = "field p=3\nambient 2\n0 1\n";
static const char* diag = "field p=3\nambient 2\n1 1\n";

int main(void) {
  asg_subspace *x = NULL, *a = NULL, *d = NULL, *out = NULL, *q = NULL;
  char* text = NULL;

  EXPECT(asg_subspace_parse(line_x, &x) == ASG_OK);
  EXPECT(asg_subspace_parse(line_a, &a) == ASG_OK);
  EXPECT(asg_subspace_parse(diag, &d) == ASG_OK);
  EXPECT(asg_subspace_dim(x) == 1 && asg_subspace_ambient(x) == 2);

  /* x = y in C_ab gives z */
  EXPECT(asg_gamma(d, x, d, a, x, ASG_GAMMA_OPERATOR, &out) == ASG_OK);
  EXPECT(asg_subspace_equal(out, x));
  asg_subspace_free(out);
  EXPECT(asg_gamma(d, x, d, a, x, ASG_GAMMA_BRUTEFORCE, &out) == ASG_OK);
  EXPECT(asg_subspace_equal(out, x));
  asg_subspace_free(out);

  /* Pi_0(x,a,z) = x meet (z join a) */
  EXPECT(asg_pi("0", x, a, d, &out) == ASG_OK);
  EXPECT(asg_subspace_equal(out, x));
  asg_subspace_free(out);
  /* Pi_r(x,a,x) = x */
  EXPECT(asg_pi("2", x, a, x, &out) == ASG_OK);
  EXPECT(asg_subspace_equal(out, x));
  asg_subspace_free(out);

  EXPECT(asg_subspace_format_line(d, &text) == ASG_OK);
  EXPECT(strcmp(text, "{1 1}") == 0);
  asg_string_free(text);

  EXPECT(asg_subspace_parse("field p=3\nambient 2\n1 0 0\n", &q) == ASG_ERR_PARSE);
  EXPECT(strstr(asg_last_error(), "line 3") != NULL);
  EXPECT(asg_subspace_parse("field q\nambient 2\n1 0\n", &q) == ASG_OK);
  EXPECT(asg_gamma(q, q, q, q, x, ASG_GAMMA_EXTENDED, &out) == ASG_ERR_MISMATCH);
  asg_subspace_free(q);

  EXPECT(asg_enumerate("p=2", 3, 1, &text) == ASG_OK);
  {
    int lines = 0;
    for (const char* c = text; *c; ++c) lines += *c == '\n';
    EXPECT(lines == 7);
  }
  asg_string_free(text);

  EXPECT(asg_group_table(x, a, d, &text) == ASG_OK);
  EXPECT(strstr(text, "elements 2") != NULL && strstr(text, "cyclic yes") != NULL);
  asg_string_free(text);

  {
    asg_pair* p = NULL;
    int passed = 0;
    char* witness = NULL;
    EXPECT(asg_pair_hom("p=3", 1, 2, &p) == ASG_OK);
    EXPECT(asg_pair_check(p, 5, 50, &passed, &witness) == ASG_OK);
    EXPECT(passed == 1 && witness == NULL);
    asg_pair_free(p);
  }

  {
    asg_run_config cfg = {"p=2", 2, 3, 20, 1, 0};
    asg_report* r = NULL;
    EXPECT(asg_verify("klein", &cfg, &r) == ASG_OK);
    EXPECT(asg_report_passed(r));
    asg_report_free(r);
    EXPECT(asg_verify("nope", &cfg, &r) == ASG_ERR_INVALID_ARGUMENT);
    cfg.corrupt = 1;
    EXPECT(asg_verify("axioms", &cfg, &r) == ASG_OK);
    EXPECT(!asg_report_passed(r));
    EXPECT(asg_report_json(r, &text) == ASG_OK);
    EXPECT(strstr(text, "\"counterexample\"") != NULL);
    asg_string_free(text);
    asg_report_free(r);
  }

  asg_subspace_free(x);
  asg_subspace_free(a);
  asg_subspace_free(d);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
