"""
Boolean index patterns G ⊆ {1..n}², stored as bit-packed rows.
"""

from typing import Any, Iterable, Sequence

from pydantic import Field, model_validator

from src.models.base import DomainModel
from src.models.matrix import MAX_DIMENSION
from src.utils.bitset import (
    Rows,
    edge_count,
    full_mask,
    iter_bits,
    strip_diagonal,
    transpose_rows,
)
from src.utils.exceptions import DimensionMismatchError, IndexRangeError, ParseError


class Pattern(DomainModel):
    """
    Set of index pairs on n vertices.

    Bit m of rows[k] is set iff (k+1, m+1) belongs to the pattern. Read as a
    digraph, that pair is an arc from vertex k+1 to vertex m+1.
    """

    n: int = Field(..., ge=1, le=MAX_DIMENSION)
    rows: Rows

    @model_validator(mode="after")
    def check_rows(self) -> "Pattern":
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = full_mask(self.n)
        for row in self.rows:
            if row < 0 or row & ~limit:
                raise IndexRangeError(f"Pattern row {row:#x} exceeds n={self.n}")
        return self

    # Construction

    @classmethod
    def trusted(cls, n: int, rows: Sequence[int]) -> "Pattern":
        return cls.model_construct(n=n, rows=tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Pattern":
        return cls(n=n, rows=(0,) * n)

    @classmethod
    def full(cls, n: int) -> "Pattern":
        return cls(n=n, rows=(full_mask(n),) * n)

    @classmethod
    def identity(cls, n: int) -> "Pattern":
        return cls(n=n, rows=tuple(1 << k for k in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Pattern":
        """Build from 1-based (k, m) pairs; duplicates collapse."""
        rows = [0] * n
        for edge in edges:
            if not isinstance(edge, (list, tuple)) or len(edge) != 2:
                raise ParseError(f"Edge must be a pair: {edge!r}")
            k, m = edge
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in edge):
                raise ParseError(f"Edge indices must be integers: {edge!r}")
            if not (1 <= k <= n and 1 <= m <= n):
                raise IndexRangeError(f"Edge ({k}, {m}) outside 1..{n}")
            rows[k - 1] |= 1 << (m - 1)
        return cls(n=n, rows=tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> "Pattern":
        n = len(matrix)
        rows = []
        for row in matrix:
            if len(row) != n:
                raise ParseError("Adjacency matrix must be square")
            mask = 0
            for m, value in enumerate(row):
                if value not in (0, 1) or isinstance(value, bool):
                    raise ParseError(f"Adjacency entries must be 0 or 1: {value!r}")
                if value:
                    mask |= 1 << m
            rows.append(mask)
        return cls(n=n, rows=tuple(rows))

    # Views

    def edges(self) -> list[tuple[int, int]]:
        """1-based pairs in row-major order."""
        return [(k + 1, m + 1) for k, row in enumerate(self.rows) for m in iter_bits(row)]

    def __contains__(self, edge: object) -> bool:
        if not isinstance(edge, tuple) or len(edge) != 2:
            return False
        k, m = edge
        if not (1 <= k <= self.n and 1 <= m <= self.n):
            return False
        return bool(self.rows[k - 1] >> (m - 1) & 1)

    def edge_count(self) -> int:
        return edge_count(self.rows)

    def adjacency(self) -> list[list[int]]:
        return [[row >> m & 1 for m in range(self.n)] for row in self.rows]

    def has_loops(self) -> bool:
        return any(row >> k & 1 for k, row in enumerate(self.rows))

    # Set algebra

    def _check_same(self, other: "Pattern") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(self.n, other.n)

    def without_loops(self) -> "Pattern":
        return Pattern.trusted(self.n, strip_diagonal(self.rows))

    def with_diagonal(self) -> "Pattern":
        return Pattern.trusted(
            self.n, tuple(row | 1 << k for k, row in enumerate(self.rows))
        )

    def transpose(self) -> "Pattern":
        return Pattern.trusted(self.n, transpose_rows(self.rows, self.n))

    def union(self, other: "Pattern") -> "Pattern":
        self._check_same(other)
        return Pattern.trusted(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersection(self, other: "Pattern") -> "Pattern":
        self._check_same(other)
        return Pattern.trusted(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def difference(self, other: "Pattern") -> "Pattern":
        self._check_same(other)
        return Pattern.trusted(self.n, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: "Pattern") -> bool:
        self._check_same(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def with_edge(self, k: int, m: int) -> "Pattern":
        rows = list(self.rows)
        rows[k - 1] |= 1 << (m - 1)
        return Pattern.trusted(self.n, rows)

    def with_edge_removed(self, k: int, m: int) -> "Pattern":
        rows = list(self.rows)
        rows[k - 1] &= ~(1 << (m - 1))
        return Pattern.trusted(self.n, rows)

    def relabel(self, permutation: Sequence[int]) -> "Pattern":
        """Apply the 0-based vertex map k -> permutation[k] to rows and columns."""
        rows = [0] * self.n
        for k, row in enumerate(self.rows):
            mask = 0
            for m in iter_bits(row):
                mask |= 1 << permutation[m]
            rows[permutation[k]] = mask
        return Pattern.trusted(self.n, rows)

    # Serialization

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [list(edge) for edge in self.edges()]}

    @classmethod
    def from_json(cls, payload: Any) -> "Pattern":
        if not isinstance(payload, dict):
            raise ParseError("Pattern JSON must be an object")
        if "adjacency" in payload:
            pattern = cls.from_adjacency(payload["adjacency"])
            if "n" in payload and payload["n"] != pattern.n:
                raise ParseError(
                    f"Pattern JSON declares n={payload['n']} but adjacency is {pattern.n}"
                )
            return pattern
        if "n" not in payload or "edges" not in payload:
            raise ParseError("Pattern JSON needs 'n' and 'edges' or 'adjacency'")
        n = payload["n"]
        if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_DIMENSION:
            raise ParseError(f"Pattern dimension must be an int in 1..{MAX_DIMENSION}")
        edges = payload["edges"]
        if not isinstance(edges, list):
            raise ParseError("'edges' must be a list of [k, m] pairs")
        return cls.from_edges(n, edges)
