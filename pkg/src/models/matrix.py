"""
Dense exact matrices and diagonal spectra.
"""

import math
from fractions import Fraction
from typing import Any, Optional, Sequence

from pydantic import Field, model_validator

from src.models.base import DomainModel
from src.models.scalars import ONE, ZERO, ComplexRational, ScalarLike
from src.utils.exceptions import DimensionMismatchError, ParseError, SpectrumError

MAX_DIMENSION = 64

Entries = tuple[tuple[ComplexRational, ...], ...]


class Matrix(DomainModel):
    """Square matrix over Q(i); entries are indexed 0-based internally."""

    n: int = Field(..., ge=1, le=MAX_DIMENSION, description="Dimension")
    entries: Entries = Field(..., description="Row-major entries")

    @model_validator(mode="after")
    def check_square(self) -> "Matrix":
        if len(self.entries) != self.n or any(
            len(row) != self.n for row in self.entries
        ):
            raise ValueError(f"entries must form a {self.n}x{self.n} array")
        return self

    # Construction

    @classmethod
    def trusted(cls, n: int, entries: Entries) -> "Matrix":
        """Build without validation; callers guarantee shape and types."""
        return cls.model_construct(n=n, entries=entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        n = len(rows)
        return cls(
            n=n,
            entries=tuple(
                tuple(ComplexRational.coerce(v) for v in row) for row in rows
            ),
        )

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[ComplexRational]) -> "Matrix":
        return cls.trusted(
            n, tuple(tuple(flat[k * n : (k + 1) * n]) for k in range(n))
        )

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls.trusted(n, tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> "Matrix":
        n = len(values)
        diag = [ComplexRational.coerce(v) for v in values]
        return cls.trusted(
            n,
            tuple(
                tuple(diag[k] if k == m else ZERO for m in range(n))
                for k in range(n)
            ),
        )

    # Access

    def entry(self, k: int, m: int) -> ComplexRational:
        return self.entries[k][m]

    def flat(self) -> list[ComplexRational]:
        return [value for row in self.entries for value in row]

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    # Arithmetic

    def _check_same(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(self.n, other.n)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix.trusted(
            self.n,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix.trusted(
            self.n,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        n = self.n
        columns = list(zip(*other.entries))
        rows = []
        for row in self.entries:
            out = []
            for col in columns:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return Matrix.trusted(n, tuple(rows))

    def scale(self, factor: ScalarLike) -> "Matrix":
        c = ComplexRational.coerce(factor)
        return Matrix.trusted(
            self.n, tuple(tuple(c * v for v in row) for row in self.entries)
        )

    def transpose(self) -> "Matrix":
        return Matrix.trusted(self.n, tuple(zip(*self.entries)))

    def power(self, exponent: int) -> "Matrix":
        if exponent < 1:
            raise ValueError("exponent must be >= 1")
        result = self
        for _ in range(exponent - 1):
            result = result @ self
        return result

    # Serialization

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "entries": [[v.to_json() for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, payload: Any, tolerance: float = 0.0) -> "Matrix":
        """
        Parse exact or float matrix JSON.

        Float entries with modulus at most `tolerance` snap to exact zero;
        the rest keep the exact binary value of the float.
        """
        if not isinstance(payload, dict):
            raise ParseError("Matrix JSON must be an object")
        if "entries" in payload:
            rows = payload["entries"]
            parsed = [[ComplexRational.from_json(v) for v in row] for row in _rows(rows)]
        elif "entries_f" in payload:
            if not math.isfinite(tolerance) or tolerance < 0:
                raise ParseError(
                    f"Tolerance must be finite and non-negative, got {tolerance}"
                )
            tol_sq = Fraction(tolerance) ** 2
            parsed = []
            for row in _rows(payload["entries_f"]):
                parsed_row = []
                for value in row:
                    if not isinstance(value, (list, tuple)) or len(value) != 2:
                        raise ParseError(f"Float entry must be [re, im]: {value!r}")
                    re_part, im_part = _finite(value[0]), _finite(value[1])
                    z = ComplexRational.from_float(re_part, im_part)
                    parsed_row.append(ZERO if z.norm_squared() <= tol_sq else z)
                parsed.append(parsed_row)
        else:
            raise ParseError("Matrix JSON needs 'entries' or 'entries_f'")
        n = payload.get("n", len(parsed))
        if n != len(parsed):
            raise ParseError(f"Matrix JSON declares n={n} but has {len(parsed)} rows")
        return cls(n=n, entries=tuple(tuple(row) for row in parsed))


def _finite(part: Any) -> float:
    if isinstance(part, bool) or not isinstance(part, (int, float)):
        raise ParseError(f"Float entry part must be a number, got {part!r}")
    try:
        value = float(part)
    except OverflowError as e:
        raise ParseError(f"Float entry part out of range: {part!r}", e) from e
    if not math.isfinite(value):
        raise ParseError(f"Float entry part must be finite, got {part!r}")
    return value


def _rows(rows: Any) -> list[list[Any]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("Matrix rows must be a list of lists")
    return rows


class DiagonalSpectrum(DomainModel):
    """Eigenvalues of the diagonal operator; distinct and nonzero."""

    n: int = Field(..., ge=1, le=MAX_DIMENSION)
    lambdas: tuple[ComplexRational, ...]

    @model_validator(mode="after")
    def check_hypotheses(self) -> "DiagonalSpectrum":
        if len(self.lambdas) != self.n:
            raise ValueError(f"expected {self.n} eigenvalues, got {len(self.lambdas)}")
        if any(value.is_zero() for value in self.lambdas):
            raise SpectrumError("nonzero", "Eigenvalues must be nonzero")
        if len(set(self.lambdas)) != self.n:
            raise SpectrumError("distinct", "Eigenvalues must be distinct")
        return self

    @classmethod
    def of(cls, values: Sequence[ScalarLike]) -> "DiagonalSpectrum":
        lambdas = tuple(ComplexRational.coerce(v) for v in values)
        return cls(n=len(lambdas), lambdas=lambdas)

    def matrix(self) -> Matrix:
        return Matrix.diagonal(self.lambdas)

    def to_json(self) -> list[list[int]]:
        return [value.to_json() for value in self.lambdas]

    @classmethod
    def from_json(cls, payload: Any) -> "DiagonalSpectrum":
        if not isinstance(payload, list) or not payload:
            raise ParseError("'lambda' must be a nonempty list of exact scalars")
        return cls.of([ComplexRational.from_json(v) for v in payload])


class MatrixPair(DomainModel):
    """The pair (Λ, A) read from a pair file."""

    spectrum: DiagonalSpectrum
    matrix: Matrix

    @model_validator(mode="after")
    def check_dimensions(self) -> "MatrixPair":
        if self.spectrum.n != self.matrix.n:
            raise DimensionMismatchError(self.spectrum.n, self.matrix.n)
        return self

    def to_json(self) -> dict[str, Any]:
        return {"lambda": self.spectrum.to_json(), "A": self.matrix.to_json()}

    @classmethod
    def from_json(
        cls, payload: Any, tolerance: Optional[float] = None
    ) -> "MatrixPair":
        if not isinstance(payload, dict) or "lambda" not in payload or "A" not in payload:
            raise ParseError("Pair JSON needs 'lambda' and 'A'")
        return cls(
            spectrum=DiagonalSpectrum.from_json(payload["lambda"]),
            matrix=Matrix.from_json(payload["A"], tolerance or 0.0),
        )
