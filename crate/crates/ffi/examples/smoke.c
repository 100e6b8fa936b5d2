#include <stdio.h>
#include "grpx.h"

int main(void) {
    GrpxGroup *g = NULL;
    if (grpx_group_build("C(9) x C(3)", &g) != GRPX_STATUS_OK) {
        fprintf(stderr, "%s\n", grpx_last_error());
        return 1;
    }
    GrpxLattice *l = NULL;
    grpx_lattice_new(g, &l);
    GrpxComplex *c = NULL;
    grpx_complex_new(l, GRPX_COMPLEX_KIND_STRONG, 0, &c);
    uint64_t f[4];
    size_t n = grpx_complex_f_vector(c, f, 4);
    printf("order %llu, subgroups %llu, f-vector", (unsigned long long)grpx_group_order(g),
           (unsigned long long)grpx_lattice_len(l));
    for (size_t i = 0; i < n; i++) printf(" %llu", (unsigned long long)f[i]);
    printf("\n");
    grpx_complex_free(c);
    grpx_lattice_free(l);
    grpx_group_free(g);
    return 0;
}
