"""
Result models emitted by the services and the command line.
"""

from typing import Any, Literal, Optional

from pydantic import Field, model_validator

from src.models.base import DomainModel
from src.models.matrix import MAX_DIMENSION, Matrix
from src.models.pattern import Pattern
from src.models.scalars import ComplexRational
from src.models.subsets import IndexSubset, Partition
from src.utils.exceptions import ParseError, VerificationMismatchError


class ClassificationReport(DomainModel):
    """Verdicts for a pair (Λ, A) plus the data that justifies them."""

    irreducible: bool
    schur_irreducible: bool
    indecomposable: bool
    weak_components: Partition
    invariant_subsets: tuple[IndexSubset, ...]
    witness: Optional[IndexSubset] = None
    support: Pattern

    @model_validator(mode="after")
    def check_implications(self) -> "ClassificationReport":
        if self.irreducible and not self.schur_irreducible:
            raise VerificationMismatchError("irreducible but not Schur irreducible")
        if self.schur_irreducible != self.indecomposable:
            raise VerificationMismatchError(
                "Schur irreducibility and indecomposability disagree"
            )
        if self.irreducible != (not self.invariant_subsets):
            raise VerificationMismatchError(
                "irreducible verdict disagrees with the invariant subset list"
            )
        if self.schur_irreducible != (self.weak_components.block_count == 1):
            raise VerificationMismatchError(
                "Schur verdict disagrees with the weak component count"
            )
        if (self.witness is None) != self.irreducible:
            raise VerificationMismatchError("witness must be present iff reducible")
        return self

    @property
    def n(self) -> int:
        return self.support.n

    @property
    def invariant_dimensions(self) -> list[int]:
        """Dimensions k admitting a common invariant coordinate subspace."""
        return sorted({len(subset.members) for subset in self.invariant_subsets})

    def to_json(self) -> dict[str, Any]:
        return {
            "irreducible": self.irreducible,
            "schur_irreducible": self.schur_irreducible,
            "indecomposable": self.indecomposable,
            "weak_components": self.weak_components.to_json(),
            "invariant_subsets": [s.to_json() for s in self.invariant_subsets],
            "witness": self.witness.to_json() if self.witness else None,
            "support": self.support.to_json(),
        }

    @classmethod
    def from_json(cls, payload: Any) -> "ClassificationReport":
        if not isinstance(payload, dict) or "support" not in payload:
            raise ParseError("Report JSON needs a 'support' pattern")
        support = Pattern.from_json(payload["support"])
        n = support.n
        witness = payload.get("witness")
        return cls(
            irreducible=payload["irreducible"],
            schur_irreducible=payload["schur_irreducible"],
            indecomposable=payload["indecomposable"],
            weak_components=Partition.from_json(n, payload["weak_components"]),
            invariant_subsets=tuple(
                IndexSubset.from_json(n, s) for s in payload["invariant_subsets"]
            ),
            witness=IndexSubset.from_json(n, witness) if witness is not None else None,
            support=support,
        )


class CanonicalForm(DomainModel):
    """Least row-major adjacency bit-string over all vertex relabelings."""

    n: int = Field(..., ge=1, le=MAX_DIMENSION)
    code: str = Field(..., pattern="^[01]+$")

    @model_validator(mode="after")
    def check_length(self) -> "CanonicalForm":
        if len(self.code) != self.n * self.n:
            raise ParseError(f"Canonical code must have {self.n * self.n} bits")
        return self

    def to_pattern(self) -> Pattern:
        n = self.n
        return Pattern.from_adjacency(
            [[int(self.code[k * n + m]) for m in range(n)] for k in range(n)]
        )

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "code": self.code}

    @classmethod
    def from_json(cls, payload: Any) -> "CanonicalForm":
        if not isinstance(payload, dict):
            raise ParseError("Canonical form JSON must be an object")
        return cls(n=payload.get("n"), code=payload.get("code"))


class CountTableRow(DomainModel):
    n: int = Field(..., ge=1)
    labeled: Optional[int] = None
    unlabeled: Optional[int] = None
    seconds: float = 0.0

    @model_validator(mode="after")
    def check_counts(self) -> "CountTableRow":
        if (
            self.labeled is not None
            and self.unlabeled is not None
            and self.labeled < self.unlabeled
        ):
            raise VerificationMismatchError(
                f"n={self.n}: labeled count {self.labeled} below unlabeled {self.unlabeled}"
            )
        return self

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "labeled": self.labeled,
            "unlabeled": self.unlabeled,
            "seconds": round(self.seconds, 3),
        }

    @classmethod
    def from_json(cls, payload: Any) -> "CountTableRow":
        if not isinstance(payload, dict) or "n" not in payload:
            raise ParseError("Count table row needs 'n'")
        return cls(**payload)


class CountTable(DomainModel):
    rows: tuple[CountTableRow, ...]

    def to_json(self) -> list[dict[str, Any]]:
        return [row.to_json() for row in self.rows]

    def column(self, name: Literal["labeled", "unlabeled"]) -> list[Optional[int]]:
        return [getattr(row, name) for row in self.rows]


class EnumerationResult(DomainModel):
    """Count of minimal strongly connected digraphs, optionally with the list."""

    n: int = Field(..., ge=1)
    labeled: bool
    count: int = Field(..., ge=0)
    patterns: tuple[Pattern, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "labeled": self.labeled, "count": self.count}


class DiagonalUnitPolynomial(DomainModel):
    """q_k with q_k(Λ) = E_kk; coefficients ascending, constant term zero."""

    k: int = Field(..., ge=1)
    coefficients: tuple[ComplexRational, ...]
    value: Matrix

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "coefficients": [c.to_json() for c in self.coefficients],
            "value": self.value.to_json(),
        }


class SpanBasis(DomainModel):
    """Reduced echelon basis of a subspace of n×n matrices."""

    n: int = Field(..., ge=1, le=MAX_DIMENSION)
    basis: tuple[Matrix, ...]
    pivots: tuple[int, ...]

    @model_validator(mode="after")
    def check_pivots(self) -> "SpanBasis":
        if len(self.pivots) != len(self.basis):
            raise VerificationMismatchError("one pivot per basis element required")
        if any(a >= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise VerificationMismatchError("echelon pivots must strictly increase")
        if len(self.basis) > self.n * self.n:
            raise VerificationMismatchError("dimension exceeds n²")
        return self

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "basis": [m.to_json() for m in self.basis],
        }


class VerificationOutcome(DomainModel):
    """Criteria verdicts next to the brute-force oracle values for one instance."""

    support: Pattern
    irreducible: bool
    schur_irreducible: bool
    indecomposable: bool
    algebra_dimension: int
    commutant_dimension: int
    decomposable: bool
    subsets_match: bool

    @property
    def agrees(self) -> bool:
        n = self.support.n
        return (
            self.irreducible == (self.algebra_dimension == n * n)
            and self.schur_irreducible == (self.commutant_dimension == 1)
            and self.indecomposable == (not self.decomposable)
            and self.subsets_match
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "support": self.support.to_json(),
            "irreducible": self.irreducible,
            "schur_irreducible": self.schur_irreducible,
            "indecomposable": self.indecomposable,
            "oracle": {
                "algebra_dimension": self.algebra_dimension,
                "commutant_dimension": self.commutant_dimension,
                "decomposable": self.decomposable,
                "invariant_subsets_match": self.subsets_match,
            },
            "agrees": self.agrees,
        }


class SweepSummary(DomainModel):
    n: int = Field(..., ge=1)
    mode: Literal["exhaustive", "random"]
    instances: int = Field(..., ge=0)
    seed: Optional[int] = None
    disagreements: tuple[VerificationOutcome, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "mode": self.mode,
            "instances": self.instances,
            "seed": self.seed,
            "disagreements": [d.to_json() for d in self.disagreements],
            "passed": self.passed,
        }


class LiftStep(DomainModel):
    """One arrow group s_i^(r)(n) -> children in n+1."""

    parent: IndexSubset
    projector: Literal[0, 1]
    children: tuple[IndexSubset, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "parent": self.parent.to_json(),
            "projector": self.projector,
            "children": [c.to_json() for c in self.children],
        }
