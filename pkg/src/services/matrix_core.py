"""
Exact matrix operations: support extraction, matrix units, commutators and
the diagonal interpolation polynomials q_k with q_k(Λ) = E_kk.
"""

from fractions import Fraction
from typing import Sequence, Union

from src.models.matrix import Matrix, DiagonalSpectrum
from src.models.pattern import Pattern
from src.models.reports import DiagonalUnitPolynomial
from src.models.scalars import ONE, ZERO, ComplexRational, ScalarLike
from src.utils.exceptions import IndexRangeError
from src.utils.logging_utils import setup_logger

logger = setup_logger(__name__)

SpectrumLike = Union[DiagonalSpectrum, Sequence[ScalarLike]]


def support(matrix: Matrix, tolerance: Union[float, Fraction] = 0) -> Pattern:
    """
    Pairs (k, m) whose entry has modulus strictly above `tolerance`.

    Args:
        matrix: Exact matrix
        tolerance: Nonnegative threshold; 0 keeps every nonzero entry

    Returns:
        Pattern: The support of the matrix
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    threshold = Fraction(tolerance) ** 2
    rows = []
    for row in matrix.entries:
        mask = 0
        for m, value in enumerate(row):
            if value.norm_squared() > threshold:
                mask |= 1 << m
        rows.append(mask)
    return Pattern.trusted(matrix.n, rows)


def matrix_unit(n: int, k: int, m: int) -> Matrix:
    """E_km in dimension n, 1-based indices."""
    if not (1 <= k <= n and 1 <= m <= n):
        raise IndexRangeError(f"Matrix unit E_{k},{m} outside 1..{n}")
    entries = tuple(
        tuple(ONE if (r, c) == (k - 1, m - 1) else ZERO for c in range(n))
        for r in range(n)
    )
    return Matrix.trusted(n, entries)


def commutator(x: Matrix, y: Matrix) -> Matrix:
    """[X, Y] = XY - YX."""
    return x @ y - y @ x


def unit_sandwich(matrix: Matrix, k: int, m: int) -> Matrix:
    """E_kk · A · E_mm, which equals a_km · E_km."""
    n = matrix.n
    return matrix_unit(n, k, k) @ matrix @ matrix_unit(n, m, m)


def evaluate_polynomial(coefficients: Sequence[ScalarLike], matrix: Matrix) -> Matrix:
    """Horner evaluation of sum c_j X^j with ascending coefficients."""
    n = matrix.n
    identity = Matrix.identity(n)
    if not coefficients:
        return Matrix.zeros(n)
    result = identity.scale(coefficients[-1])
    for c in reversed(coefficients[:-1]):
        result = result @ matrix + identity.scale(c)
    return result


def _as_spectrum(spectrum: SpectrumLike) -> DiagonalSpectrum:
    if isinstance(spectrum, DiagonalSpectrum):
        return spectrum
    return DiagonalSpectrum.of(list(spectrum))


def _multiply_linear(
    poly: list[ComplexRational], root: ComplexRational
) -> list[ComplexRational]:
    """poly(x) · (x - root), ascending coefficients."""
    out = [ZERO] * (len(poly) + 1)
    for j, c in enumerate(poly):
        out[j + 1] = out[j + 1] + c
        out[j] = out[j] - c * root
    return out


def interpolation_coefficients(
    spectrum: SpectrumLike, k: int
) -> list[ComplexRational]:
    """
    Coefficients of q_k(x) = x·∏(x - λ_j) / (λ_k·∏(λ_k - λ_j)), j ≠ k.

    The constant term is always zero, so q_k lies in the non-unital algebra
    generated by Λ.
    """
    lam = _as_spectrum(spectrum).lambdas
    if not 1 <= k <= len(lam):
        raise IndexRangeError(f"Eigenvalue index {k} outside 1..{len(lam)}")
    target = lam[k - 1]
    poly = [ZERO, ONE]
    denominator = target
    for j, value in enumerate(lam):
        if j == k - 1:
            continue
        poly = _multiply_linear(poly, value)
        denominator = denominator * (target - value)
    scale = denominator.inverse()
    return [c * scale for c in poly]


def interpolated_diagonal_units(
    spectrum: SpectrumLike,
) -> list[DiagonalUnitPolynomial]:
    """q_k and q_k(Λ) for every k; each q_k(Λ) is exactly E_kk."""
    diagonal = _as_spectrum(spectrum)
    lam_matrix = diagonal.matrix()
    units = []
    for k in range(1, diagonal.n + 1):
        coefficients = interpolation_coefficients(diagonal, k)
        units.append(
            DiagonalUnitPolynomial(
                k=k,
                coefficients=tuple(coefficients),
                value=evaluate_polynomial(coefficients, lam_matrix),
            )
        )
    logger.debug(f"Built {diagonal.n} diagonal interpolation polynomials")
    return units
