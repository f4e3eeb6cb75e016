#include <stdio.h>
#include <string.h>
#include "macpieri.h"

static int fail(const char *what) {
    const char *m = macpieri_last_error();
    fprintf(stderr, "%s: %s\n", what, m ? m : "(none)");
    return 1;
}

int main(void) {
    int64_t lam[] = {2, 1};
    MacpieriExpansion *e = NULL;
    if (macpieri_expand(lam, 2, MACPIERI_SIDE_QG, &e) != MACPIERI_OK) return fail("expand");
    size_t n = 0;
    macpieri_expansion_len(e, &n);
    if (n != 2) return fail("length");
    int64_t idx[4];
    size_t len = 0;
    macpieri_expansion_index(e, 1, idx, 4, &len);
    if (len != 1 || idx[0] != 3) return fail("index");
    MacpieriRatFunc *c = NULL;
    char *s = NULL;
    macpieri_expansion_coeff(e, 0, &c);
    macpieri_ratfunc_to_string(c, &s);
    if (strcmp(s, "1") != 0) return fail("coeff");
    macpieri_string_free(s);
    macpieri_ratfunc_free(c);
    macpieri_expansion_free(e);

    int64_t bad[] = {1, 2};
    if (macpieri_expand(bad, 2, MACPIERI_SIDE_QG, &e) != MACPIERI_ERR_PARAMETER) return fail("non-partition accepted");
    if (macpieri_last_error() == NULL) return fail("no message");
    printf("ok\n");
    return 0;
}
