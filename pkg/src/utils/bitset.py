"""
Bit-packed row helpers.

A pattern on n vertices is a tuple of n ints; bit m of row k is set iff the
pair (k, m) belongs to the pattern (both 0-based).
"""

from typing import Iterator, Sequence

Rows = tuple[int, ...]


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(indices: Sequence[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def transpose_rows(rows: Sequence[int], n: int) -> Rows:
    out = [0] * n
    for k, row in enumerate(rows):
        bit = 1 << k
        for m in iter_bits(row):
            out[m] |= bit
    return tuple(out)


def strip_diagonal(rows: Sequence[int]) -> Rows:
    return tuple(row & ~(1 << k) for k, row in enumerate(rows))


def reach(rows: Sequence[int], start: int) -> int:
    """Mask of vertices reachable from start (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        step = 0
        for k in iter_bits(frontier):
            step |= rows[k]
        frontier = step & ~seen
        seen |= frontier
    return seen


def edge_count(rows: Sequence[int]) -> int:
    return sum(popcount(row) for row in rows)


def loop_free_rows(n: int) -> Iterator[Rows]:
    """Every loop-free pattern on n vertices, off-diagonal slots read as bits."""
    slots = [(k, m) for k in range(n) for m in range(n) if k != m]
    for bits in range(1 << len(slots)):
        rows = [0] * n
        for index in iter_bits(bits):
            k, m = slots[index]
            rows[k] |= 1 << m
        yield tuple(rows)
