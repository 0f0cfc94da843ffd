"""
Irreducibility criteria for the pair (Λ, A) with Λ diagonal, distinct and
nonzero.

- irreducible        <=> support digraph of A is strongly connected
- Schur irreducible  <=> support digraph of A is weakly connected
- indecomposable     <=> Schur irreducible

V_i = span{e_j : j ∈ i} is invariant iff a_km = 0 whenever k ∉ i and m ∈ i
(A acts on columns: A e_m = Σ_k a_km e_k).
"""

from typing import Optional, Sequence, Union

from src.models.matrix import DiagonalSpectrum, Matrix
from src.models.pattern import Pattern
from src.models.reports import ClassificationReport
from src.models.scalars import ScalarLike
from src.models.subsets import IndexSubset, Partition
from src.services.connectivity import (
    ancestor_mask,
    strongly_connected,
    weak_components,
    weakly_connected,
)
from src.services.matrix_core import support
from src.services.pattern_semiring import is_generating, symmetrized
from src.services.subalgebra_lattice import containing_maximal_subalgebras
from src.utils.bitset import full_mask
from src.utils.exceptions import DimensionMismatchError
from src.utils.logging_utils import log_execution_time, setup_logger

logger = setup_logger(__name__)

SpectrumLike = Union[DiagonalSpectrum, Sequence[ScalarLike]]


def _validated(spectrum: SpectrumLike, matrix: Matrix) -> DiagonalSpectrum:
    diagonal = (
        spectrum
        if isinstance(spectrum, DiagonalSpectrum)
        else DiagonalSpectrum.of(list(spectrum))
    )
    if diagonal.n != matrix.n:
        raise DimensionMismatchError(diagonal.n, matrix.n)
    return diagonal


def invariant_coordinate_subspaces(
    spectrum: SpectrumLike, matrix: Matrix
) -> list[IndexSubset]:
    """Every proper nonempty i with V_i invariant under Λ and A."""
    _validated(spectrum, matrix)
    if matrix.n == 1:
        return []
    return containing_maximal_subalgebras(support(matrix))


def minimal_invariant_subset(pattern: Pattern) -> Optional[IndexSubset]:
    """
    Least proper invariant set by (size, members), or None if there is none.

    The smallest invariant sets are ancestor closures of single vertices.
    """
    full = full_mask(pattern.n)
    closures = {ancestor_mask(pattern, v) for v in range(1, pattern.n + 1)}
    candidates = [
        IndexSubset.from_mask(pattern.n, mask) for mask in closures if mask != full
    ]
    return min(candidates, key=IndexSubset.sort_key, default=None)


@log_execution_time(logger)
def _report(pattern: Pattern) -> ClassificationReport:
    n = pattern.n
    if n == 1:
        return ClassificationReport(
            irreducible=True,
            schur_irreducible=True,
            indecomposable=True,
            weak_components=Partition(n=1, blocks=((1,),)),
            invariant_subsets=(),
            witness=None,
            support=pattern,
        )

    irreducible = strongly_connected(pattern)
    schur = weakly_connected(pattern)
    witness = None if irreducible else minimal_invariant_subset(pattern)
    invariant = containing_maximal_subalgebras(pattern)
    logger.debug(
        f"n={n}: strongly={irreducible} weakly={schur} invariant={len(invariant)}"
    )
    return ClassificationReport(
        irreducible=irreducible,
        schur_irreducible=schur,
        indecomposable=schur,
        weak_components=weak_components(pattern),
        invariant_subsets=tuple(invariant),
        witness=witness,
        support=pattern,
    )


def classify(spectrum: SpectrumLike, matrix: Matrix) -> ClassificationReport:
    """
    Decide the three verdicts from the support of A.

    Args:
        spectrum: Eigenvalues of Λ
        matrix: The operator A

    Returns:
        ClassificationReport: Verdicts, weak components, invariant subsets

    Raises:
        SpectrumError: If the eigenvalues are repeated or zero
        DimensionMismatchError: If Λ and A differ in size
        CapExceededError: If the invariant subsets outnumber MATALG_SUBSET_LIST_CAP
    """
    _validated(spectrum, matrix)
    return _report(support(matrix))


def commutant_dimension(matrix: Matrix) -> int:
    """Number of weak components of Supp(A); b_k is constant on each."""
    return weak_components(support(matrix)).block_count


def schur_generating(matrix: Matrix) -> bool:
    """True iff the matrix units on Supp(A) ∪ Supp(A)ᵗ generate Mat(n)."""
    if matrix.n == 1:
        return True
    return is_generating(symmetrized(support(matrix).without_loops()))
