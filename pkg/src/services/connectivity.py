"""
Digraph views of patterns.

(k, m) ∈ G is an arc k -> m. Self-loops stay in the pattern but never count
for connectivity, and a minimal strongly connected pattern has none.
"""

from typing import Sequence

import networkx as nx

from src.models.pattern import Pattern
from src.models.subsets import Partition
from src.utils.bitset import full_mask, iter_bits, reach, strip_diagonal, transpose_rows
from src.utils.exceptions import CapExceededError


def to_digraph(g: Pattern) -> nx.DiGraph:
    """networkx view on vertices 1..n, self-loops dropped."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, g.n + 1))
    graph.add_edges_from((k, m) for k, m in g.edges() if k != m)
    return graph


def rows_strongly_connected(rows: Sequence[int], n: int) -> bool:
    """Forward and backward reachability from vertex 0 on loop-free rows."""
    full = full_mask(n)
    if reach(rows, 0) != full:
        return False
    return reach(transpose_rows(rows, n), 0) == full


def strongly_connected(g: Pattern) -> bool:
    if g.n == 1:
        return True
    return rows_strongly_connected(strip_diagonal(g.rows), g.n)


def _undirected_rows(g: Pattern) -> tuple[int, ...]:
    rows = strip_diagonal(g.rows)
    return tuple(a | b for a, b in zip(rows, transpose_rows(rows, g.n)))


def weakly_connected(g: Pattern) -> bool:
    return reach(_undirected_rows(g), 0) == full_mask(g.n)


def weak_components(g: Pattern) -> Partition:
    """Maximal weakly connected blocks, sorted by least element."""
    undirected = _undirected_rows(g)
    remaining = full_mask(g.n)
    blocks = []
    while remaining:
        start = next(iter_bits(remaining))
        block = reach(undirected, start)
        blocks.append(block)
        remaining &= ~block
    return Partition.from_masks(g.n, blocks)


def strong_components(g: Pattern) -> Partition:
    """Maximal strongly connected blocks; singletons allowed."""
    components = nx.strongly_connected_components(to_digraph(g))
    masks = []
    for component in components:
        mask = 0
        for vertex in component:
            mask |= 1 << (vertex - 1)
        masks.append(mask)
    return Partition.from_masks(g.n, masks)


def rows_minimal_strongly_connected(rows: Sequence[int], n: int) -> bool:
    """Literal edge-deletion test on rows that carry no self-loops."""
    if not rows_strongly_connected(rows, n):
        return False
    scratch = list(rows)
    for k, row in enumerate(rows):
        for m in iter_bits(row):
            scratch[k] = row & ~(1 << m)
            still = rows_strongly_connected(scratch, n)
            scratch[k] = row
            if still:
                return False
    return True


def minimal_strongly_connected(g: Pattern) -> bool:
    """Strongly connected, loop-free, and every arc is essential."""
    if g.has_loops():
        return False
    if g.n == 1:
        return True
    return rows_minimal_strongly_connected(g.rows, g.n)


def ancestor_mask(g: Pattern, vertex: int) -> int:
    """Mask of vertices with a path into `vertex` (1-based), itself included."""
    return reach(transpose_rows(strip_diagonal(g.rows), g.n), vertex - 1)


def predecessor_closed_masks(g: Pattern, limit: int) -> list[int]:
    """
    Proper nonempty masks i holding every predecessor of each member.

    These are the down-sets of the strong-component condensation, built one
    component at a time in topological order, so the work grows with the
    number of sets returned rather than with 2^n.

    Raises:
        CapExceededError: If more than `limit` sets exist
    """
    condensation = nx.condensation(to_digraph(g))
    order = list(nx.topological_sort(condensation))
    component_masks = {
        c: sum(1 << (v - 1) for v in condensation.nodes[c]["members"]) for c in order
    }
    parents = {c: set(condensation.predecessors(c)) for c in order}
    full = full_mask(g.n)
    found: list[int] = []

    def extend(position: int, chosen: frozenset[int], mask: int) -> None:
        if position == len(order):
            if 0 < mask < full:
                found.append(mask)
                if len(found) > limit:
                    raise CapExceededError("invariant subsets", len(found), limit)
            return
        component = order[position]
        if parents[component] <= chosen:
            extend(position + 1, chosen | {component}, mask | component_masks[component])
        extend(position + 1, chosen, mask)

    extend(0, frozenset(), 0)
    return found
