#include <stdio.h>
#include <string.h>

#include "shellab.h"

int main(void) {
    ShellabLabeledPoset *lp = NULL;
    ShellabCord *cord = NULL;
    size_t chains = 0;
    bool complete = true;

    if (shellab_fixture("fig2", &lp) != SHELLAB_STATUS_OK) {
        return 10;
    }
    if (shellab_cord_build(lp, &cord) != SHELLAB_STATUS_OK) {
        return 11;
    }
    shellab_cord_len(cord, &chains);
    shellab_cord_is_polygon_complete(cord, &complete);

    char *dot = NULL;
    shellab_cord_to_dot(cord, &dot);
    int dot_ok = dot != NULL && strncmp(dot, "digraph", 7) == 0;
    shellab_string_free(dot);

    ShellabLabeledPoset *missing = NULL;
    int unknown = shellab_fixture("fig99", &missing) == SHELLAB_STATUS_UNKNOWN_FIXTURE;
    char *msg = shellab_last_error_message();
    int msg_ok = msg != NULL && strstr(msg, "fig99") != NULL;
    shellab_string_free(msg);

    shellab_cord_free(cord);
    shellab_labeled_poset_free(lp);

    printf("chains=%zu complete=%d dot=%d unknown=%d msg=%d\n", chains, (int)complete, dot_ok, unknown, msg_ok);
    return (chains == 4 && !complete && dot_ok && unknown && msg_ok) ? 0 : 1;
}
