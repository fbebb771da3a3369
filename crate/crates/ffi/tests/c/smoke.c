#include <stdio.h>
#include <string.h>
#include "unilinear.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, ul_last_error()); return 1; } } while (0)

int main(void) {
    UlAlgebra *a = NULL;
    CHECK(ul_make_cyclic(2, 2, false, &a) == UL_STATUS_OK);

    size_t n = 0;
    CHECK(ul_algebra_size(a, &n) == UL_STATUS_OK && n == 6);

    UlFlags flags;
    CHECK(ul_algebra_flags(a, &flags) == UL_STATUS_OK);
    CHECK(flags.is_unilinear && flags.compact && flags.height == 4 && flags.width == 2);

    char *text = NULL;
    CHECK(ul_algebra_render(a, &text) == UL_STATUS_OK);
    CHECK(strncmp(text, "frl 1\n", 6) == 0);

    UlAlgebra *b = NULL;
    CHECK(ul_algebra_parse(text, &b) == UL_STATUS_OK);
    bool ok = false;
    CHECK(ul_algebra_check(b, &ok) == UL_STATUS_OK && ok);

    size_t v = 0;
    CHECK(ul_algebra_op(b, UL_OP_MUL, 99, 0, &v) == UL_STATUS_OUT_OF_RANGE);
    CHECK(ul_algebra_parse("frl 1\nsize x\n", &b) == UL_STATUS_SYNTAX);

    uint32_t e = 0;
    CHECK(ul_sig_exp("(1; p2:[2,1]; p3:[3,1,1]; p7:[2,1,1])", &e) == UL_STATUS_OK && e == 3);

    ul_string_free(text);
    ul_algebra_free(a);
    ul_algebra_free(b);
    puts("ok");
    return 0;
}
