#include <stdio.h>
#include <string.h>
#include "spinrep.h"

#define CHECK(x) do { if (!(x)) { fprintf(stderr, "failed: %s\n", #x); return 1; } } while (0)

int main(void) {
    SpinrepGroup *g = NULL;
    size_t order = 0, classes = 0;
    CHECK(spinrep_group_new("R243", &g) == SPINREP_STATUS_OK);
    CHECK(spinrep_group_order(g, &order) == SPINREP_STATUS_OK && order == 243);
    CHECK(spinrep_group_class_count(g, &classes) == SPINREP_STATUS_OK && classes == 35);
    spinrep_group_free(g);
    CHECK(spinrep_group_new("G28", &g) == SPINREP_STATUS_UNKNOWN_GROUP);

    SpinrepCharTable *t = NULL;
    size_t rows = 0, cols = 0;
    CHECK(spinrep_chartable_new(&t) == SPINREP_STATUS_OK);
    CHECK(spinrep_chartable_shape(t, &rows, &cols) == SPINREP_STATUS_OK && rows == 35 && cols == 35);
    char *v = NULL;
    CHECK(spinrep_chartable_value(t, 0, 0, &v) == SPINREP_STATUS_OK && strcmp(v, "1") == 0);
    spinrep_string_free(v);
    CHECK(spinrep_chartable_value(t, 35, 0, &v) == SPINREP_STATUS_OUT_OF_RANGE);
    spinrep_chartable_free(t);

    printf("%s\n", spinrep_status_message(SPINREP_STATUS_OK));
    return 0;
}
