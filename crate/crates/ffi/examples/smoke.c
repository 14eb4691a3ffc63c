#include <stdio.h>
#include "upset_prune.h"

int main(void) {
    const char *m_json = "{\"dim\": 2, \"summands\": [{\"generators\": [[\"2\",\"2\"]]}, {\"generators\": [[\"4\",\"4\"]]}]}";
    const char *n_json = "{\"dim\": 2, \"summands\": [{\"generators\": [[\"5\",\"5\"]]}, {\"generators\": [[\"5\",\"5\"]]}]}";
    UpmModule *m = NULL, *n = NULL;
    if (upm_module_from_json(m_json, &m) != UPM_STATUS_OK || upm_module_from_json(n_json, &n) != UPM_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", upm_last_error());
        return 1;
    }
    char *dp = NULL, *db = NULL;
    int32_t exact = 0;
    upm_pruning_distance(m, n, NULL, 1, &dp, &exact);
    upm_bottleneck_distance(m, n, &db);
    printf("d_P = %s (exact %d), d_B = %s\n", dp, exact, db);

    UpmModule *bad = NULL;
    UpmStatus status = upm_module_from_json("{", &bad);
    printf("status %d: %s\n", (int)status, upm_last_error());

    upm_string_free(dp);
    upm_string_free(db);
    upm_module_free(m);
    upm_module_free(n);
    return 0;
}
