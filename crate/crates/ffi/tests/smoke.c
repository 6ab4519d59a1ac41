#include <stdio.h>
#include <string.h>
#include "schroder_maj.h"

int main(void) {
    SmPoly *e = NULL, *f = NULL;
    bool empty = true, same = false;
    if (sm_schroeder_maj_enum(0, 2, 2, 1, "E>D>N", &e) != SM_STATUS_OK) return 1;
    if (sm_schroeder_maj_closed(0, 2, 2, 1, NULL, &f, &empty) != SM_STATUS_OK) return 2;
    if (sm_poly_equal(e, f, &same) != SM_STATUS_OK || !same || empty) return 3;
    char *text = NULL;
    if (sm_poly_to_string(f, &text) != SM_STATUS_OK) return 4;
    printf("%s\n", text);
    int ok = strcmp(text, "q + q^2 + q^3") == 0;
    sm_string_free(text);
    sm_poly_free(e);
    sm_poly_free(f);
    if (sm_bijection_apply("rho", "2 1 / 3 4", &text) != SM_STATUS_NOT_IN_FAMILY) return 5;
    if (sm_last_error() == NULL) return 6;
    return ok ? 0 : 7;
}
