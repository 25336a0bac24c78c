/* The public header must be valid C. */
#include <stdio.h>

#include "wsurf/wsurf.h"

int main(void) {
    wsurf_equation* eq = NULL;
    wsurf_data* data = NULL;
    wsurf_constants k;
    wsurf_complex xi0;
    wsurf_sample s;
    int rc = 1;
    if (wsurf_equation_create("bessel", &eq) != WSURF_OK) return 1;
    if (wsurf_equation_defaults(eq, &k, &xi0, NULL) != WSURF_OK) goto done;
    if (wsurf_data_create(eq, &k, WSURF_SOURCE_NUMERIC, 0.0, &data) != WSURF_OK) goto done;
    {
        wsurf_complex xi = {1.0, 1.0};
        if (wsurf_sample_point(data, xi0, xi, 0, &s) != WSURF_OK) goto done;
    }
    printf("F = (%.6f, %.6f, %.6f)\n", s.F[0], s.F[1], s.F[2]);
    rc = 0;
done:
    if (rc) fprintf(stderr, "%s\n", wsurf_last_error());
    wsurf_data_destroy(data);
    wsurf_equation_destroy(eq);
    return rc;
}
