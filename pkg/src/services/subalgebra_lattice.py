"""
Maximal proper pattern subalgebras s_i(n) of Mat(n), their invariant
coordinate subspaces V_i(n), and the lift s(n) -> s(n+1).
"""

from typing import Literal, Sequence

from config.settings import get_settings
from src.models.pattern import Pattern
from src.models.reports import LiftStep
from src.models.subsets import IndexSubset, MaximalSubalgebra
from src.services.connectivity import predecessor_closed_masks
from src.services.enumeration import canonical_form
from src.services.pattern_semiring import is_pattern_subalgebra, pattern_closure
from src.utils.bitset import full_mask, popcount
from src.utils.exceptions import (
    CapExceededError,
    DimensionMismatchError,
    SubsetError,
    VerificationMismatchError,
)
from src.utils.logging_utils import setup_logger

logger = setup_logger(__name__)


def _check_dimension(n: int) -> None:
    if n < 2:
        raise SubsetError(f"Proper nonempty subsets need n >= 2, got n={n}")
    cap = get_settings().SUBSET_SCAN_CAP
    if n > cap:
        raise CapExceededError("n", n, cap)


def _ordered(subsets: list[IndexSubset]) -> list[IndexSubset]:
    return sorted(subsets, key=IndexSubset.sort_key)


def proper_subsets(n: int) -> list[IndexSubset]:
    """All proper nonempty subsets of {1..n}, by size then lexicographically."""
    _check_dimension(n)
    return _ordered([IndexSubset.from_mask(n, mask) for mask in range(1, full_mask(n))])


def maximal_subalgebra(subset: IndexSubset) -> MaximalSubalgebra:
    """Pattern {1..n}² minus {(k, m) : k ∉ i, m ∈ i}."""
    n = subset.n
    inside = subset.mask
    full = full_mask(n)
    rows = tuple(full if inside >> k & 1 else full & ~inside for k in range(n))
    return MaximalSubalgebra(subset=subset, pattern=Pattern.trusted(n, rows))


def enumerate_maximal_subalgebras(n: int) -> list[MaximalSubalgebra]:
    """Exactly 2^n - 2 subalgebras, ordered by subset size then members."""
    subalgebras = [maximal_subalgebra(subset) for subset in proper_subsets(n)]
    logger.debug(f"Enumerated {len(subalgebras)} maximal subalgebras for n={n}")
    return subalgebras


def invariant_subspace_of(subset: IndexSubset) -> list[int]:
    """Coordinates j whose e_j span V_i(n)."""
    return list(subset.members)


def containing_maximal_subalgebras(g: Pattern) -> list[IndexSubset]:
    """
    Every i with G ⊆ s_i(n): the sets holding every predecessor of a member.

    Raises:
        SubsetError: If n < 2
        CapExceededError: If there are more than MATALG_SUBSET_LIST_CAP such sets
    """
    if g.n < 2:
        raise SubsetError(f"Proper nonempty subsets need n >= 2, got n={g.n}")
    masks = predecessor_closed_masks(g, get_settings().SUBSET_LIST_CAP)
    return _ordered([IndexSubset.from_mask(g.n, mask) for mask in masks])


def lifted_children(subset: IndexSubset) -> dict[Literal[0, 1], list[IndexSubset]]:
    """
    Children in n+1 grouped by projector.

    P^(0): i and i_0 = i ∪ {n+1}; P^(1): i+1 and i_1 = (i+1) ∪ {1}.
    """
    n = subset.n
    inside = subset.mask
    shifted = inside << 1
    return {
        0: [
            IndexSubset.from_mask(n + 1, inside),
            IndexSubset.from_mask(n + 1, inside | 1 << n),
        ],
        1: [
            IndexSubset.from_mask(n + 1, shifted),
            IndexSubset.from_mask(n + 1, shifted | 1),
        ],
    }


def _level_dimension(level: Sequence[IndexSubset]) -> int:
    if not level:
        raise SubsetError("Cannot lift an empty level")
    n = level[0].n
    for subset in level:
        if subset.n != n:
            raise DimensionMismatchError(n, subset.n)
    return n


def lift_derivation(level: Sequence[IndexSubset]) -> list[LiftStep]:
    """Arrow groups s_i^(r)(n) -> children, parents in the given order."""
    _level_dimension(level)
    steps = []
    for parent in level:
        for side, children in lifted_children(parent).items():
            steps.append(
                LiftStep(parent=parent, projector=side, children=tuple(children))
            )
    return steps


def lift_subalgebras(level: Sequence[IndexSubset]) -> list[IndexSubset]:
    """
    Deduplicated children of a complete level-n list.

    Raises:
        VerificationMismatchError: If the children do not number 2^(n+1) - 2
    """
    n = _level_dimension(level)
    children: dict[int, IndexSubset] = {}
    for parent in level:
        for group in lifted_children(parent).values():
            for child in group:
                children.setdefault(child.mask, child)
    expected = 2 ** (n + 1) - 2
    if len(children) != expected:
        raise VerificationMismatchError(
            f"Lift from n={n} produced {len(children)} subsets, expected {expected}; "
            "input level is incomplete"
        )
    return _ordered(list(children.values()))


def projector(pattern: Pattern, r: Literal[0, 1]) -> Pattern:
    """
    Pattern-level P^(r): Mat(n+1) -> Mat(n).

    r = 0 keeps indices 1..n; r = 1 keeps 2..n+1 renumbered to 1..n.
    """
    n = pattern.n - 1
    if n < 1:
        raise SubsetError("Projector needs a pattern with n >= 2")
    mask = full_mask(n)
    if r == 0:
        rows = tuple(row & mask for row in pattern.rows[:n])
    else:
        rows = tuple(row >> 1 & mask for row in pattern.rows[1:])
    return Pattern.trusted(n, rows)


def is_maximal_pattern_subalgebra(s: Pattern) -> bool:
    """Proper subalgebra such that adjoining any absent pair generates {1..n}²."""
    n = s.n
    if not is_pattern_subalgebra(s):
        return False
    full = full_mask(n)
    if all(row == full for row in s.rows):
        return False
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            if (k, m) in s:
                continue
            closure = pattern_closure(s.with_edge(k, m))
            if not all(row == full for row in closure.rows):
                return False
    return True


def subalgebra_classes(n: int) -> list[list[MaximalSubalgebra]]:
    """Maximal subalgebras grouped up to simultaneous index permutation."""
    groups: dict[str, list[MaximalSubalgebra]] = {}
    for subalgebra in enumerate_maximal_subalgebras(n):
        code = canonical_form(subalgebra.pattern).code
        groups.setdefault(code, []).append(subalgebra)
    classes = list(groups.values())
    logger.debug(
        f"n={n}: {len(classes)} classes of sizes {[len(c) for c in classes]} "
        f"(subset sizes {[popcount(c[0].subset.mask) for c in classes]})"
    )
    return classes
