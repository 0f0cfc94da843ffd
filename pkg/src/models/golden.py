"""
Published reference values used by `--golden` checks and the test-suite.

Each constant carries the provenance of the values it holds.
"""

# Minimal strongly connected labeled digraphs, OEIS A130768, offset n=1.
# n=1..6 are reproduced; the remaining published terms are kept for reference.
LABELED_COUNTS: dict[int, int] = {1: 1, 2: 1, 3: 5, 4: 58, 5: 1069, 6: 27816}
LABELED_COUNTS_PUBLISHED_TAIL: dict[int, int] = {
    7: 943669,
    8: 39757264,
    9: 2010923289,
}

# Minimal strongly connected digraphs up to isomorphism, OEIS A130756.
UNLABELED_COUNTS: dict[int, int] = {1: 1, 2: 1, 3: 2, 4: 5, 5: 15, 6: 63}
UNLABELED_COUNTS_PUBLISHED_TAIL: dict[int, int] = {
    7: 288,
    8: 1526,
    9: 8627,
    10: 52021,
    11: 328432,
    12: 2160415,
}

# The unique minimal generating subset for n=2, 1-based pairs.
G2_EDGES: list[tuple[int, int]] = [(1, 2), (2, 1)]

# All minimal generating subsets for n=3 as adjacency matrices, G_1(3)..G_5(3).
G3_ADJACENCY: list[list[list[int]]] = [
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
    [[0, 1, 1], [1, 0, 0], [1, 0, 0]],
    [[0, 0, 1], [0, 0, 1], [1, 1, 0]],
]

# One representative per isomorphism class for n=4.
N4_CLASS_ADJACENCY: list[list[list[int]]] = [
    [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]],
    [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, 1, 0, 0]],
    [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, 0, 1, 0]],
    [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]],
    [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]],
]

# Maximal subalgebras as displayed: subsets i in display order.
S2_SUBSETS: list[list[int]] = [[1], [2]]
S3_SUBSETS: list[list[int]] = [[1], [2], [3], [2, 3], [1, 3], [1, 2]]
S4_SUBSETS: list[list[int]] = [
    [1], [2], [3], [4],
    [2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3],
    [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4],
]  # fmt: skip

# s(4) shape blocks by |i| in display order and their multiplicities.
S4_BLOCK_SIZES: list[tuple[int, int]] = [(1, 4), (3, 4), (2, 6)]

# Lift arrows n=2 -> n=3: (parent, projector) -> children.
LIFT_ARROWS_2_TO_3: dict[tuple[tuple[int, ...], int], list[list[int]]] = {
    ((1,), 0): [[1], [1, 3]],
    ((1,), 1): [[2], [1, 2]],
    ((2,), 0): [[2], [2, 3]],
    ((2,), 1): [[3], [1, 3]],
}

# Edge counts of minimal strongly connected digraphs seen for small n.
EDGE_COUNTS: dict[int, set[int]] = {2: {2}, 3: {3, 4}}
