"""Bundled example data used by the test-suite, the demo script, and the docs."""
from __future__ import annotations

from .graphs import from_edge_list

# 9-vertex graph with minimum degree 2 whose dominating induced matchings
# all have size 3 (one of them is {12, 34, 56}).  Adding the ten edges
# 18, 19, 29, 37, 39, 47, 49, 57, 67, 68 turns it into the complete-DIM
# graph generate_cdim(3, 3).
DEMO_GRAPH = from_edge_list(
    9,
    [
        (1, 2),
        (1, 7),
        (2, 7),
        (2, 8),
        (3, 4),
        (3, 8),
        (4, 8),
        (5, 6),
        (5, 9),
        (5, 8),
        (6, 9),
    ],
)

# Adjacency spectrum (non-increasing) of a 12-vertex graph with a dominating
# induced matching of size 4; the bound min(|{lambda <= -1}|, |{lambda >= 1}|)
# is tight here.  Only the spectrum is bundled, not the edge set.
REFERENCE_SPECTRUM_12 = (
    2.590,
    2.308,
    1.481,
    1.386,
    0.579,
    0.034,
    -0.547,
    -0.897,
    -1.311,
    -1.597,
    -1.870,
    -2.156,
)
