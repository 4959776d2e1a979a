#include "geomgraph.h"
#include <assert.h>
#include <stdio.h>
#include <string.h>

int main(void) {
    const char *json =
        "{ \"points\": [[0,0],[4,4],[0,4],[4,1],[10,0],[11,5]],"
        "  \"edges\": [[0,1],[2,3],[4,5]] }";
    GgGraph *g = NULL;
    assert(gg_graph_from_json(json, &g) == GG_STATUS_OK);
    assert(g != NULL);

    char *witness = NULL;
    assert(gg_detect(g, "crossing-family:2,1", 1000000, &witness) == GG_STATUS_OK);
    assert(strstr(witness, "\"found\": true") != NULL);
    gg_string_free(witness);

    char *svg = NULL;
    assert(gg_render_svg(g, "crossing-family:2,1", 1000000, &svg) == GG_STATUS_OK);
    assert(strncmp(svg, "<svg ", 5) == 0);
    gg_string_free(svg);

    gg_graph_free(g);

    GgGraph *bad = NULL;
    assert(gg_graph_from_json("{ \"points\": [[0,0],[1,1],[2,2]] }", &bad) ==
           GG_STATUS_VALIDATION_ERROR);
    assert(bad == NULL);

    printf("c-abi smoke: OK (version %s)\n", gg_version());
    return 0;
}
