"""
Enumeration of minimal strongly connected digraphs, labeled and up to
isomorphism, plus full-permutation canonical forms.

The search walks adjacency rows vertex by vertex. Each row is a nonempty
loop-free mask, the total edge count stays within [n, 2(n-1)], and every
vertex must end up with an incoming arc. Surviving leaves get the literal
edge-deletion minimality test.
"""

import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional, Sequence

from config.settings import get_settings, worker_count
from src.models.pattern import Pattern
from src.models.reports import (
    CanonicalForm,
    CountTable,
    CountTableRow,
    EnumerationResult,
)
from src.services.connectivity import rows_minimal_strongly_connected
from src.utils.bitset import Rows, edge_count, full_mask, iter_bits, loop_free_rows
from src.utils.exceptions import CapExceededError, IndexRangeError
from src.utils.logging_utils import log_async_execution_time, setup_logger

logger = setup_logger(__name__)

# Canonical codes


@lru_cache(maxsize=None)
def _reversed_rows(n: int) -> tuple[int, ...]:
    """Bit-reversal of every n-bit row, so column 1 becomes the high bit."""
    table = []
    for value in range(1 << n):
        out = 0
        for m in iter_bits(value):
            out |= 1 << (n - 1 - m)
        table.append(out)
    return tuple(table)


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def rows_code(rows: Sequence[int], n: int) -> int:
    """Row-major adjacency bit-string read as a binary number."""
    table = _reversed_rows(n)
    code = 0
    for row in rows:
        code = code << n | table[row]
    return code


def code_string(code: int, n: int) -> str:
    return format(code, f"0{n * n}b")


def relabel_rows(rows: Sequence[int], permutation: Sequence[int]) -> Rows:
    """Rows after sending vertex k to permutation[k]."""
    out = [0] * len(rows)
    for k, row in enumerate(rows):
        mask = 0
        for m in iter_bits(row):
            mask |= 1 << permutation[m]
        out[permutation[k]] = mask
    return tuple(out)


def orbit_codes(rows: Sequence[int], n: int) -> set[int]:
    return {rows_code(relabel_rows(rows, p), n) for p in _permutations(n)}


def _check_permutation_cap(n: int) -> None:
    cap = get_settings().PERMUTATION_CAP
    if n > cap:
        raise CapExceededError("n", n, cap)


def canonical_form(g: Pattern) -> CanonicalForm:
    """Least adjacency bit-string over all n! simultaneous relabelings."""
    _check_permutation_cap(g.n)
    return CanonicalForm(n=g.n, code=code_string(min(orbit_codes(g.rows, g.n)), g.n))


def pattern_from_code(code: int, n: int) -> Pattern:
    table = _reversed_rows(n)
    chunk = full_mask(n)
    rows = [table[code >> (n * (n - 1 - k)) & chunk] for k in range(n)]
    return Pattern.trusted(n, rows)


def orbit(g: Pattern) -> list[Pattern]:
    """Distinct relabelings of G, ordered by code."""
    _check_permutation_cap(g.n)
    return [pattern_from_code(c, g.n) for c in sorted(orbit_codes(g.rows, g.n))]


# Search


@lru_cache(maxsize=None)
def _row_choices(n: int, k: int) -> tuple[tuple[int, int], ...]:
    """(mask, out-degree) for nonempty rows of vertex k without a loop."""
    loop = 1 << k
    masks = [mask for mask in range(1, 1 << n) if not mask & loop]
    return tuple(sorted(((m, m.bit_count()) for m in masks), key=lambda c: (c[1], c[0])))


def max_edges_for(n: int) -> int:
    return 2 * (n - 1)


def search_partition(
    n: int, first_row: int, max_edges: int, non_increasing: bool
) -> list[Rows]:
    """
    All minimal strongly connected row tuples whose first row is `first_row`.

    With `non_increasing` only out-degree sequences d_1 >= d_2 >= ... are
    visited, which still meets every isomorphism class.
    """
    full = full_mask(n)
    choices = [_row_choices(n, k) for k in range(n)]
    rows = [0] * n
    rows[0] = first_row
    found: list[Rows] = []

    def extend(k: int, used: int, cover: int, previous: int) -> None:
        if k == n:
            if cover == full and rows_minimal_strongly_connected(rows, n):
                found.append(tuple(rows))
            return
        rows_left = n - k - 1
        for mask, degree in choices[k]:
            if non_increasing and degree > previous:
                break
            if used + degree + rows_left > max_edges:
                break
            new_cover = cover | mask
            if (full & ~new_cover).bit_count() > max_edges - used - degree:
                continue
            rows[k] = mask
            extend(k + 1, used + degree, new_cover, degree)
        rows[k] = 0

    degree = first_row.bit_count()
    extend(1, degree, first_row, degree)
    return found


def _search_task(args: tuple[int, int, int, bool]) -> list[Rows]:
    return search_partition(*args)


def first_rows(n: int, max_edges: int) -> list[int]:
    return [mask for mask, degree in _row_choices(n, 0) if degree + n - 1 <= max_edges]


def _sort_key(rows: Rows, n: int) -> tuple[int, int]:
    return (edge_count(rows), rows_code(rows, n))


def collapse_classes(found: Iterable[Rows], n: int) -> list[tuple[int, int]]:
    """
    (canonical code, orbit size) per isomorphism class met in `found`.

    A class is relabeled in full only the first time one of its members
    shows up; later members are recognised by code lookup.
    """
    seen: set[int] = set()
    classes = []
    for rows in found:
        if rows_code(rows, n) in seen:
            continue
        codes = orbit_codes(rows, n)
        seen |= codes
        classes.append((min(codes), len(codes)))
    return classes


def _check_enumeration_range(n: int, labeled: bool) -> None:
    if n < 1:
        raise IndexRangeError(f"Enumeration needs n >= 1, got n={n}")
    settings = get_settings()
    cap = settings.LABELED_CAP if labeled else settings.UNLABELED_CAP
    if n > cap:
        raise CapExceededError("n", n, cap)


def assemble_result(
    n: int, labeled: bool, partitions: Iterable[list[Rows]], stream: bool
) -> EnumerationResult:
    """Deterministic merge: patterns ordered by edge count, then bit order."""
    found = [rows for part in partitions for rows in part]
    if labeled:
        found.sort(key=lambda rows: _sort_key(rows, n))
        patterns = tuple(Pattern.trusted(n, rows) for rows in found) if stream else ()
        return EnumerationResult(n=n, labeled=True, count=len(found), patterns=patterns)
    classes = collapse_classes(found, n)
    representatives = sorted(
        (pattern_from_code(code, n) for code, _ in classes),
        key=lambda p: _sort_key(p.rows, n),
    )
    return EnumerationResult(
        n=n,
        labeled=False,
        count=len(classes),
        patterns=tuple(representatives) if stream else (),
    )


def _trivial_result(labeled: bool, stream: bool) -> EnumerationResult:
    patterns = (Pattern.empty(1),) if stream else ()
    return EnumerationResult(n=1, labeled=labeled, count=1, patterns=patterns)


def enumerate_minimal_scc(
    n: int, labeled: bool = True, stream: bool = False
) -> EnumerationResult:
    """
    Count minimal strongly connected digraphs on n vertices in this process.

    Args:
        n: Number of vertices
        labeled: Count every labeling, or one per isomorphism class
        stream: Keep the patterns (canonical representatives when unlabeled)

    Returns:
        EnumerationResult: Count and optional pattern list

    Raises:
        CapExceededError: If n is above the configured cap
    """
    _check_enumeration_range(n, labeled)
    if n == 1:
        return _trivial_result(labeled, stream)
    max_edges = max_edges_for(n)
    non_increasing = not labeled
    partitions = [
        search_partition(n, row, max_edges, non_increasing)
        for row in first_rows(n, max_edges)
    ]
    return assemble_result(n, labeled, partitions, stream)


def isomorphism_class_representatives(n: int) -> list[Pattern]:
    """One canonical pattern per isomorphism class."""
    return list(enumerate_minimal_scc(n, labeled=False, stream=True).patterns)


def observed_edge_counts(n: int) -> set[int]:
    """Edge counts of minimal strongly connected patterns in an unpruned sweep."""
    if n > 4:
        raise CapExceededError("n", n, 4)
    if n == 1:
        return {0}
    return {
        edge_count(rows)
        for rows in loop_free_rows(n)
        if rows_minimal_strongly_connected(rows, n)
    }


def verify_edge_bound(n: int) -> bool:
    """True iff the unpruned sweep finds nothing outside [n, 2(n-1)] edges."""
    if n == 1:
        return True
    return all(n <= count <= max_edges_for(n) for count in observed_edge_counts(n))


class EnumerationService:
    """Runs the search across worker processes and builds count tables."""

    def __init__(self, workers: Optional[int] = None) -> None:
        self.workers = workers if workers is not None else worker_count()

    async def _partitions(
        self, n: int, max_edges: int, non_increasing: bool
    ) -> list[list[Rows]]:
        tasks = [(n, row, max_edges, non_increasing) for row in first_rows(n, max_edges)]
        if self.workers <= 1:
            return [_search_task(task) for task in tasks]
        logger.info(f"n={n}: {len(tasks)} partitions over {self.workers} workers")
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            return list(
                await asyncio.gather(
                    *(loop.run_in_executor(pool, _search_task, task) for task in tasks)
                )
            )

    @log_async_execution_time(logger)
    async def enumerate(
        self, n: int, labeled: bool = True, stream: bool = False
    ) -> EnumerationResult:
        _check_enumeration_range(n, labeled)
        if n == 1:
            return _trivial_result(labeled, stream)
        partitions = await self._partitions(n, max_edges_for(n), not labeled)
        result = assemble_result(n, labeled, partitions, stream)
        logger.info(
            f"n={n} {'labeled' if labeled else 'unlabeled'}: {result.count} digraphs"
        )
        return result

    @log_async_execution_time(logger)
    async def count_table(
        self, max_n: int, labeled: bool = True, unlabeled: bool = True
    ) -> CountTable:
        """Rows n = 1..max_n with the requested counts and elapsed seconds."""
        if labeled:
            _check_enumeration_range(max_n, True)
        if unlabeled:
            _check_enumeration_range(max_n, False)
        rows = []
        for n in range(1, max_n + 1):
            start = time.perf_counter()
            labeled_count = (await self.enumerate(n, True)).count if labeled else None
            unlabeled_count = (
                (await self.enumerate(n, False)).count if unlabeled else None
            )
            rows.append(
                CountTableRow(
                    n=n,
                    labeled=labeled_count,
                    unlabeled=unlabeled_count,
                    seconds=time.perf_counter() - start,
                )
            )
        return CountTable(rows=tuple(rows))
