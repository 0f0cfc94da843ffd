"""
Index subsets, partitions and the maximal subalgebras they label.
"""

from typing import Any, Iterable

from pydantic import Field, field_validator, model_validator

from src.models.base import DomainModel
from src.models.matrix import MAX_DIMENSION
from src.models.pattern import Pattern
from src.utils.bitset import full_mask, iter_bits, mask_of
from src.utils.exceptions import ParseError, SubsetError


class IndexSubset(DomainModel):
    """A proper nonempty subset i of {1..n}, members sorted ascending."""

    n: int = Field(..., ge=2, le=MAX_DIMENSION)
    members: tuple[int, ...]

    @field_validator("members")
    @classmethod
    def sort_members(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(v)) != len(v):
            raise SubsetError(f"Duplicate members in {list(v)}")
        return tuple(sorted(v))

    @model_validator(mode="after")
    def check_proper(self) -> "IndexSubset":
        if not self.members:
            raise SubsetError("Index subset must be nonempty")
        if len(self.members) >= self.n:
            raise SubsetError(f"Index subset {list(self.members)} is not proper in n={self.n}")
        if self.members[0] < 1 or self.members[-1] > self.n:
            raise SubsetError(f"Index subset {list(self.members)} outside 1..{self.n}")
        return self

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "IndexSubset":
        return cls(n=n, members=tuple(members))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "IndexSubset":
        """Trusted construction from a 0-based bitmask."""
        return cls.model_construct(n=n, members=tuple(k + 1 for k in iter_bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of([k - 1 for k in self.members])

    def complement(self) -> "IndexSubset":
        return IndexSubset.from_mask(self.n, full_mask(self.n) & ~self.mask)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    def label(self) -> str:
        """Concatenated members, e.g. '13' for {1, 3}."""
        separator = "," if self.n > 9 else ""
        return separator.join(str(k) for k in self.members)

    def to_json(self) -> list[int]:
        return list(self.members)

    @classmethod
    def from_json(cls, n: int, payload: Any) -> "IndexSubset":
        if not isinstance(payload, list) or not all(
            isinstance(k, int) and not isinstance(k, bool) for k in payload
        ):
            raise ParseError(f"Index subset must be a list of integers: {payload!r}")
        return cls.of(n, payload)


class Partition(DomainModel):
    """Disjoint nonempty blocks covering {1..n}, ordered by least element."""

    n: int = Field(..., ge=1, le=MAX_DIMENSION)
    blocks: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_cover(self) -> "Partition":
        seen: list[int] = sorted(k for block in self.blocks for k in block)
        if seen != list(range(1, self.n + 1)) or any(not b for b in self.blocks):
            raise ParseError(f"Blocks {self.to_json()} do not partition 1..{self.n}")
        return self

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Partition":
        blocks = sorted(tuple(k + 1 for k in iter_bits(mask)) for mask in masks)
        return cls(n=n, blocks=tuple(blocks))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(block) for block in self.blocks]

    @classmethod
    def from_json(cls, n: int, payload: Any) -> "Partition":
        if not isinstance(payload, list) or not all(isinstance(b, list) for b in payload):
            raise ParseError("Partition must be a list of blocks")
        return cls(n=n, blocks=tuple(tuple(sorted(b)) for b in payload))


class MaximalSubalgebra(DomainModel):
    """s_i(n): all pairs except (k, m) with k outside i and m inside i."""

    subset: IndexSubset
    pattern: Pattern

    def invariant_subspace(self) -> list[int]:
        return list(self.subset.members)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.subset.n,
            "subset": self.subset.to_json(),
            "pattern": self.pattern.to_json(),
            "invariant_subspace": self.invariant_subspace(),
        }

    @classmethod
    def from_json(cls, payload: Any) -> "MaximalSubalgebra":
        if not isinstance(payload, dict) or not {"n", "subset", "pattern"} <= set(payload):
            raise ParseError("Subalgebra JSON needs 'n', 'subset' and 'pattern'")
        return cls(
            subset=IndexSubset.from_json(payload["n"], payload["subset"]),
            pattern=Pattern.from_json(payload["pattern"]),
        )
