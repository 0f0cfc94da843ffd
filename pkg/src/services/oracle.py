"""
Brute-force ground truth in exact arithmetic.

Everything here works on matrices flattened row-major into vectors of
length n², reduced with exact pivoting on the first nonzero coordinate.
Nothing in this module looks at supports or digraphs except to draw
generic instances and to report the support of a span.
"""

import random
from fractions import Fraction
from typing import Optional, Sequence

from config.settings import get_settings
from src.models.matrix import DiagonalSpectrum, Matrix
from src.models.pattern import Pattern
from src.models.reports import SpanBasis
from src.models.scalars import ZERO, ComplexRational
from src.models.subsets import IndexSubset
from src.utils.bitset import full_mask, iter_bits
from src.utils.exceptions import CapExceededError, DimensionMismatchError
from src.utils.logging_utils import setup_logger

logger = setup_logger(__name__)

Vector = list[ComplexRational]


class Echelon:
    """
    Incremental reduced row echelon form.

    Every stored vector has a leading 1 at its pivot and zeros at the
    pivots of all other stored vectors. Pivots are kept sorted.
    """

    def __init__(self, width: int) -> None:
        self.width = width
        self.rows: list[tuple[int, Vector]] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [p for p, _ in self.rows]

    def reduce(self, vector: Sequence[ComplexRational]) -> Vector:
        out = list(vector)
        for pivot, row in self.rows:
            factor = out[pivot]
            if factor:
                for j in range(pivot, self.width):
                    if row[j]:
                        out[j] = out[j] - factor * row[j]
        return out

    def add(self, vector: Sequence[ComplexRational]) -> bool:
        """Insert `vector`; False if it already lies in the span."""
        reduced = self.reduce(vector)
        pivot = next((j for j, v in enumerate(reduced) if v), None)
        if pivot is None:
            return False
        scale = reduced[pivot].inverse()
        reduced = [v * scale if v else ZERO for v in reduced]
        for index, (p, row) in enumerate(self.rows):
            factor = row[pivot]
            if factor:
                self.rows[index] = (
                    p,
                    [a - factor * b if b else a for a, b in zip(row, reduced)],
                )
        self.rows.append((pivot, reduced))
        self.rows.sort(key=lambda item: item[0])
        return True

    def contains(self, vector: Sequence[ComplexRational]) -> bool:
        return not any(self.reduce(vector))

    def nullspace(self) -> list[Vector]:
        """Basis of {x : row · x = 0 for every stored row}."""
        pivots = set(self.pivots)
        basis = []
        for free in range(self.width):
            if free in pivots:
                continue
            x = [ZERO] * self.width
            x[free] = ComplexRational(1)
            for pivot, row in self.rows:
                if row[free]:
                    x[pivot] = -row[free]
            basis.append(x)
        return basis


def _check_same_dimension(mats: Sequence[Matrix]) -> int:
    if not mats:
        raise ValueError("At least one matrix is required")
    n = mats[0].n
    for m in mats:
        if m.n != n:
            raise DimensionMismatchError(n, m.n)
    return n


def _span_basis(n: int, echelon: Echelon) -> SpanBasis:
    return SpanBasis(
        n=n,
        basis=tuple(Matrix.from_flat(n, row) for _, row in echelon.rows),
        pivots=tuple(echelon.pivots),
    )


def generated_algebra(mats: Sequence[Matrix]) -> SpanBasis:
    """
    Basis of the non-unital algebra generated by `mats`.

    Every word in the generators is a generator times a shorter word, so
    closing the span under right multiplication by each generator reaches
    the fixpoint; the dimension bound n² guarantees termination.
    """
    n = _check_same_dimension(mats)
    echelon = Echelon(n * n)
    pending = [m for m in mats if echelon.add(m.flat())]
    while pending:
        current = pending.pop()
        for generator in mats:
            product = current @ generator
            if echelon.add(product.flat()):
                pending.append(product)
    logger.debug(f"Generated algebra of dimension {len(echelon)} in Mat({n})")
    return _span_basis(n, echelon)


def commutant_basis(mats: Sequence[Matrix]) -> SpanBasis:
    """Basis of {B : MB = BM for every input M} via an exact null space."""
    n = _check_same_dimension(mats)
    width = n * n
    equations = Echelon(width)
    for m in mats:
        for i in range(n):
            for j in range(n):
                row = [ZERO] * width
                for k in range(n):
                    row[k * n + j] = row[k * n + j] + m.entries[i][k]
                    row[i * n + k] = row[i * n + k] - m.entries[k][j]
                equations.add(row)
    solutions = Echelon(width)
    for vector in equations.nullspace():
        solutions.add(vector)
    return _span_basis(n, solutions)


def support_union(span: SpanBasis) -> Pattern:
    """Union of the supports of the basis matrices."""
    rows = [0] * span.n
    for matrix in span.basis:
        for k, row in enumerate(matrix.entries):
            for m, value in enumerate(row):
                if value:
                    rows[k] |= 1 << m
    return Pattern.trusted(span.n, rows)


def coordinate_subspace_invariant(mats: Sequence[Matrix], subset: IndexSubset) -> bool:
    """True iff every M maps span{e_m : m ∈ i} into itself."""
    inside = set(k - 1 for k in subset.members)
    for matrix in mats:
        if matrix.n != subset.n:
            raise DimensionMismatchError(subset.n, matrix.n)
        for m in inside:
            for k in range(matrix.n):
                if k not in inside and matrix.entries[k][m]:
                    return False
    return True


def is_decomposable(spectrum: DiagonalSpectrum, matrix: Matrix) -> bool:
    """
    True iff some V_i and its complement V_î are both invariant.

    Raises:
        CapExceededError: If n is above the subset scan cap
    """
    n = matrix.n
    if spectrum.n != n:
        raise DimensionMismatchError(spectrum.n, n)
    if n == 1:
        return False
    cap = get_settings().SUBSET_SCAN_CAP
    if n > cap:
        raise CapExceededError("n", n, cap)
    mats = [spectrum.matrix(), matrix]
    full = full_mask(n)
    # masks containing vertex 1 cover each split once
    for mask in range(1, full, 2):
        subset = IndexSubset.from_mask(n, mask)
        if coordinate_subspace_invariant(mats, subset) and coordinate_subspace_invariant(
            mats, subset.complement()
        ):
            return True
    return False


def invariant_subset_scan(spectrum: DiagonalSpectrum, matrix: Matrix) -> list[IndexSubset]:
    """All proper nonempty i with V_i invariant, by direct column checks."""
    n = matrix.n
    if n == 1:
        return []
    cap = get_settings().SUBSET_SCAN_CAP
    if n > cap:
        raise CapExceededError("n", n, cap)
    mats = [spectrum.matrix(), matrix]
    found = [
        IndexSubset.from_mask(n, mask)
        for mask in range(1, full_mask(n))
        if coordinate_subspace_invariant(mats, IndexSubset.from_mask(n, mask))
    ]
    return sorted(found, key=IndexSubset.sort_key)


def shemesh_common_eigenvector(a: Matrix, b: Matrix) -> bool:
    """
    True iff ∩ ker[A^k, B^l] over 1 <= k, l <= n-1 is nonzero.

    For n = 1 both matrices are scalars and share e_1.
    """
    if a.n != b.n:
        raise DimensionMismatchError(a.n, b.n)
    n = a.n
    if n == 1:
        return True
    a_powers = [a]
    b_powers = [b]
    for _ in range(n - 2):
        a_powers.append(a_powers[-1] @ a)
        b_powers.append(b_powers[-1] @ b)
    stacked = Echelon(n)
    for ak in a_powers:
        for bl in b_powers:
            for row in (ak @ bl - bl @ ak).entries:
                stacked.add(row)
                if len(stacked) == n:
                    return False
    return len(stacked) < n


def diagonal_common_eigenvector(spectrum: DiagonalSpectrum, b: Matrix) -> bool:
    """
    Direct search: with distinct eigenvalues the eigenvectors of Λ are the
    multiples of e_k, and e_k is an eigenvector of B iff column k of B
    vanishes off the diagonal.
    """
    if spectrum.n != b.n:
        raise DimensionMismatchError(spectrum.n, b.n)
    return any(
        all(not b.entries[j][k] for j in range(b.n) if j != k) for k in range(b.n)
    )


# Generic instances


def random_nonzero_rational(
    rng: random.Random, bound: Optional[int] = None
) -> ComplexRational:
    bound = bound or get_settings().GENERIC_ENTRY_BOUND
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(-bound, bound)
    return ComplexRational(Fraction(numerator, rng.randint(1, bound)))


def random_spectrum(
    n: int, rng: random.Random, bound: Optional[int] = None
) -> DiagonalSpectrum:
    """n distinct nonzero rationals."""
    values: list[ComplexRational] = []
    while len(values) < n:
        value = random_nonzero_rational(rng, bound)
        if value not in values:
            values.append(value)
    return DiagonalSpectrum.of(values)


def random_generic_matrix(
    pattern: Pattern, rng: random.Random, bound: Optional[int] = None
) -> Matrix:
    """Random nonzero rationals exactly on the pattern, zeros elsewhere."""
    n = pattern.n
    entries = []
    for k in range(n):
        row = [ZERO] * n
        for m in iter_bits(pattern.rows[k]):
            row[m] = random_nonzero_rational(rng, bound)
        entries.append(tuple(row))
    return Matrix.trusted(n, tuple(entries))
