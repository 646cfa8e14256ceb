"""Worked example values for the sink quiver and the double Kronecker chain."""

SINK_WORD = "iikijkkjjikijijjjkkij"
SINK_V = (7, 6, 6, 5, 8, 5, 4, 7, 6, 4, 3, 3, 5, 2, 4, 3, 2, 2, 1, 1, 1)

ALPHA_PATTERN = """
* * * * * * *
0 * * * * * *
0 * * * * * *
0 * * * * * *
0 0 * * * * *
0 0 0 0 * * *
0 0 0 0 * * *
0 0 0 0 * * *
"""

BETA_PATTERN = """
* * * * * *
0 0 * * * *
0 0 * * * *
0 0 * * * *
0 0 * * * *
0 0 0 * * *
0 0 0 * * *
0 0 0 0 0 *
"""

CHAIN_HASSE_NODES = {
    "ijjk", "jijk", "ijkj", "jjik", "jikj", "ikjj",
    "jjki", "jkij", "kijj", "jkji", "kjij", "kjji",
}

CHAIN_HASSE_EDGES = {
    ("ijjk", "jijk"), ("ijjk", "ijkj"),
    ("jijk", "jjik"), ("jijk", "jikj"), ("ijkj", "jikj"), ("ijkj", "ikjj"),
    ("jjik", "jjki"), ("jikj", "jkij"), ("ikjj", "kijj"),
    ("jjki", "jkji"), ("jkij", "jkji"), ("jkij", "kjij"), ("kijj", "kjij"),
    ("jkji", "kjji"), ("kjij", "kjji"),
}


def pattern_text(mask):
    from quivmon.words import render_pattern

    return "\n" + render_pattern(mask) + "\n"
