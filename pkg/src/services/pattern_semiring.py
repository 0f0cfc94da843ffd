"""
Pattern calculus over the two-element semiring R = {0, 1} with 1 + 1 = 1.

Patterns multiply like their adjacency matrices over R:
A_{G1} A_{G2} = A_{G1∘G2}.
"""

from enum import Enum
from typing import Optional, Sequence

from src.models.pattern import Pattern
from src.utils.bitset import Rows, full_mask, iter_bits
from src.utils.exceptions import DimensionMismatchError


class SemiringBit(int, Enum):
    """Element of R; addition is OR, multiplication is AND."""

    ZERO = 0
    ONE = 1

    def __add__(self, other: object) -> "SemiringBit":
        return SemiringBit(int(self) | int(_bit(other)))

    __radd__ = __add__

    def __mul__(self, other: object) -> "SemiringBit":
        return SemiringBit(int(self) & int(_bit(other)))

    __rmul__ = __mul__


def _bit(value: object) -> SemiringBit:
    if isinstance(value, SemiringBit):
        return value
    if value in (0, 1):
        return SemiringBit.ONE if value else SemiringBit.ZERO
    raise ValueError(f"Not a semiring element: {value!r}")


def boolean_matrix_product(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> list[list[int]]:
    """Product of 0/1 matrices computed with the R tables entry by entry."""
    n = len(a)
    if len(b) != n:
        raise DimensionMismatchError(n, len(b))
    out = []
    for k in range(n):
        row = []
        for m in range(n):
            acc = SemiringBit.ZERO
            for p in range(n):
                acc = acc + _bit(a[k][p]) * _bit(b[p][m])
            row.append(int(acc))
        out.append(row)
    return out


def rows_product(left: Sequence[int], right: Sequence[int]) -> Rows:
    """Bit-packed G1∘G2: row k of the result is the OR of right[p], p in left[k]."""
    out = []
    for row in left:
        acc = 0
        for p in iter_bits(row):
            acc |= right[p]
        out.append(acc)
    return tuple(out)


def rows_powers_union(rows: Sequence[int], max_k: int) -> Rows:
    """G¹ ∪ ... ∪ G^max_k on bit-packed rows, stopping once the union is stable."""
    power = tuple(rows)
    union = power
    for _ in range(max_k - 1):
        power = rows_product(power, rows)
        grown = tuple(u | p for u, p in zip(union, power))
        if grown == union:
            break
        union = grown
    return union


def pattern_product(g1: Pattern, g2: Pattern) -> Pattern:
    """{(k, m) : (k, p) ∈ G1 and (p, m) ∈ G2 for some p}."""
    if g1.n != g2.n:
        raise DimensionMismatchError(g1.n, g2.n)
    return Pattern.trusted(g1.n, rows_product(g1.rows, g2.rows))


def power_sequence(g: Pattern, max_k: int) -> list[Pattern]:
    """[G¹, G², ..., G^max_k]."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    powers = [g]
    for _ in range(max_k - 1):
        powers.append(pattern_product(powers[-1], g))
    return powers


def pattern_powers_union(g: Pattern, max_k: int) -> Pattern:
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    return Pattern.trusted(g.n, rows_powers_union(g.rows, max_k))


def is_generating(g: Pattern) -> bool:
    """
    True iff the powers of G cover {1..n}².

    Covering by G¹..Gⁿ suffices, so the matrix units indexed by G generate
    Mat(n). For n = 1 this asks for (1, 1) ∈ G.
    """
    full = full_mask(g.n)
    return all(row == full for row in rows_powers_union(g.rows, g.n))


def covering_exponent(g: Pattern) -> Optional[int]:
    """Least k with G¹ ∪ ... ∪ G^k = {1..n}², or None if never."""
    full = full_mask(g.n)
    power = g.rows
    union = power
    for k in range(1, g.n + 1):
        if all(row == full for row in union):
            return k
        power = rows_product(power, g.rows)
        union = tuple(u | p for u, p in zip(union, power))
    return None


def pattern_closure(g: Pattern, with_diagonal: bool = False) -> Pattern:
    """
    Smallest product-closed pattern containing G.

    With `with_diagonal` every (k, k) is adjoined first, as happens when
    the E_kk are available from Λ.
    """
    base = g.with_diagonal() if with_diagonal else g
    return Pattern.trusted(g.n, rows_powers_union(base.rows, max(g.n, 1)))


def is_pattern_subalgebra(s: Pattern) -> bool:
    """True iff S∘S ⊆ S."""
    square = rows_product(s.rows, s.rows)
    return all(sq & ~row == 0 for sq, row in zip(square, s.rows))


def symmetrized(g: Pattern) -> Pattern:
    """G ∪ Gᵗ."""
    return g.union(g.transpose())
