"""Tests for the exact brute-force oracle."""

import random

import pytest
import sympy

from config.settings import reset_settings
from src.models.matrix import DiagonalSpectrum, Matrix
from src.models.pattern import Pattern
from src.models.scalars import ZERO, ComplexRational
from src.models.subsets import IndexSubset
from src.services.criteria import commutant_dimension
from src.services.matrix_core import interpolated_diagonal_units, matrix_unit
from src.services.oracle import (
    Echelon,
    commutant_basis,
    coordinate_subspace_invariant,
    diagonal_common_eigenvector,
    generated_algebra,
    invariant_subset_scan,
    is_decomposable,
    random_generic_matrix,
    random_nonzero_rational,
    random_spectrum,
    shemesh_common_eigenvector,
    support_union,
)
from src.services.pattern_semiring import pattern_closure
from src.utils.exceptions import CapExceededError, DimensionMismatchError

LAM2 = Matrix.diagonal([1, 2])
LAM3 = Matrix.diagonal([1, 2, 3])
SWAP = Matrix.from_rows([[0, 1], [1, 0]])
E12 = Matrix.from_rows([[0, 1], [0, 0]])


def _sympy_rank(vectors):
    rows = [[sympy.Rational(v.re.numerator, v.re.denominator) for v in vec] for vec in vectors]
    return sympy.Matrix(rows).rank() if rows else 0


def test_echelon():
    """Test reduction, membership and null space on a small system."""
    echelon = Echelon(3)
    one = [ComplexRational(1), ComplexRational(2), ComplexRational(3)]
    two = [c * 2 for c in one]
    assert echelon.add(one)
    assert not echelon.add(two)
    assert echelon.contains(two)
    assert len(echelon) == 1
    assert len(echelon.nullspace()) == 2
    for vector in echelon.nullspace():
        assert sum(a * b for a, b in zip(one, vector)) == 0


def test_echelon_rank_matches_sympy(rng):
    for _ in range(30):
        width = rng.randint(1, 6)
        vectors = [
            [random_nonzero_rational(rng, 5) if rng.random() < 0.6 else ZERO for _ in range(width)]
            for _ in range(rng.randint(1, 7))
        ]
        echelon = Echelon(width)
        for vector in vectors:
            echelon.add(vector)
        assert len(echelon) == _sympy_rank(vectors)
        assert echelon.pivots == sorted(echelon.pivots)


def test_generated_algebra_examples():
    assert generated_algebra([LAM2, SWAP]).dimension == 4
    span = generated_algebra([LAM2, E12])
    assert span.dimension == 3
    assert support_union(span).edges() == [(1, 1), (1, 2), (2, 2)]
    assert generated_algebra([Matrix.from_rows([[5]])]).dimension == 1
    with pytest.raises(DimensionMismatchError):
        generated_algebra([LAM2, LAM3])
    with pytest.raises(ValueError):
        generated_algebra([])


def test_commutant_examples():
    assert commutant_basis([LAM2]).dimension == 2
    assert commutant_basis([LAM3, Matrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])]).dimension == 2
    assert commutant_basis([LAM2, SWAP]).dimension == 1


def test_commutant_of_distinct_diagonal_is_diagonal(rng):
    for n in range(1, 5):
        basis = commutant_basis([random_spectrum(n, rng).matrix()])
        assert basis.dimension == n
        for b in basis.basis:
            assert all(not b.entry(k, m) for k in range(n) for m in range(n) if k != m)


def test_coordinate_subspace_invariant():
    mats = [LAM2, E12]
    assert coordinate_subspace_invariant(mats, IndexSubset.of(2, [1]))
    assert not coordinate_subspace_invariant(mats, IndexSubset.of(2, [2]))
    assert coordinate_subspace_invariant([LAM3, Matrix.diagonal([4, 5, 6])], IndexSubset.of(3, [2]))


def test_is_decomposable():
    assert is_decomposable(DiagonalSpectrum.of([1, 2]), Matrix.zeros(2))
    assert not is_decomposable(DiagonalSpectrum.of([1, 2]), E12)
    swap3 = Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert is_decomposable(DiagonalSpectrum.of([1, 2, 3]), swap3)
    assert not is_decomposable(DiagonalSpectrum.of([7]), Matrix.zeros(1))


def test_subset_scan_cap(monkeypatch):
    monkeypatch.setenv("MATALG_SUBSET_SCAN_CAP", "2")
    reset_settings()
    with pytest.raises(CapExceededError):
        is_decomposable(DiagonalSpectrum.of([1, 2, 3]), Matrix.zeros(3))
    with pytest.raises(CapExceededError):
        invariant_subset_scan(DiagonalSpectrum.of([1, 2, 3]), Matrix.zeros(3))


def test_shemesh_examples():
    assert shemesh_common_eigenvector(LAM2, E12)
    assert not shemesh_common_eigenvector(LAM2, SWAP)
    assert shemesh_common_eigenvector(SWAP, SWAP)
    assert shemesh_common_eigenvector(Matrix.from_rows([[2]]), Matrix.from_rows([[3]]))
    with pytest.raises(DimensionMismatchError):
        shemesh_common_eigenvector(LAM2, LAM3)


@pytest.mark.slow
def test_shemesh_agrees_with_direct_search():
    """500 random (Λ, A) instances with n <= 4."""
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 4)
        spectrum = random_spectrum(n, rng, 20)
        pattern = Pattern.trusted(n, [rng.getrandbits(n) for _ in range(n)])
        b = random_generic_matrix(pattern, rng, 20)
        assert shemesh_common_eigenvector(spectrum.matrix(), b) == diagonal_common_eigenvector(spectrum, b)


def test_generated_algebra_support_is_closure(rng):
    """Exhaustive over loop-free supports for n <= 3."""
    for n in (1, 2, 3):
        spectrum = random_spectrum(n, rng)
        slots = [(k, m) for k in range(n) for m in range(n) if k != m]
        for bits in range(1 << len(slots)):
            rows = [0] * n
            for index, (k, m) in enumerate(slots):
                if bits >> index & 1:
                    rows[k] |= 1 << m
            pattern = Pattern.trusted(n, rows)
            a = random_generic_matrix(pattern, rng)
            span = generated_algebra([spectrum.matrix(), a])
            assert support_union(span) == pattern_closure(pattern, with_diagonal=True)
            assert span.dimension == support_union(span).edge_count()


def test_generated_algebra_monotone_in_support(rng):
    for n in range(2, 5):
        for _ in range(10):
            pattern = Pattern.trusted(n, [rng.getrandbits(n) for _ in range(n)])
            k, m = rng.randrange(1, n + 1), rng.randrange(1, n + 1)
            spectrum = random_spectrum(n, rng).matrix()
            smaller = generated_algebra([spectrum, random_generic_matrix(pattern, rng)])
            larger = generated_algebra(
                [spectrum, random_generic_matrix(pattern.with_edge(k, m), rng)]
            )
            assert larger.dimension >= smaller.dimension


def test_commutant_dimension_matches_oracle(rng):
    for n in range(1, 5):
        for _ in range(15):
            pattern = Pattern.trusted(n, [rng.getrandbits(n) for _ in range(n)])
            spectrum = random_spectrum(n, rng)
            a = random_generic_matrix(pattern, rng)
            assert commutant_basis([spectrum.matrix(), a]).dimension == commutant_dimension(a)


def test_diagonal_units_lie_in_generated_algebra(rng):
    for n in range(1, 5):
        spectrum = random_spectrum(n, rng)
        span = generated_algebra([spectrum.matrix()])
        echelon = Echelon(n * n)
        for basis_matrix in span.basis:
            echelon.add(basis_matrix.flat())
        assert span.dimension == n
        for unit in interpolated_diagonal_units(spectrum):
            assert echelon.contains(unit.value.flat())
            assert unit.value == matrix_unit(n, unit.k, unit.k)


def test_random_instances_are_generic(rng):
    spectrum = random_spectrum(5, rng)
    assert len(set(spectrum.lambdas)) == 5
    pattern = Pattern.from_edges(3, [(1, 2), (3, 3)])
    a = random_generic_matrix(pattern, rng)
    assert all(bool(a.entry(k - 1, m - 1)) == ((k, m) in pattern) for k in range(1, 4) for m in range(1, 4))
