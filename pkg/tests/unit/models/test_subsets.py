import pytest

from src.models.pattern import Pattern
from src.models.subsets import IndexSubset, MaximalSubalgebra, Partition
from src.utils.exceptions import ParseError, SubsetError


def test_index_subset():
    """Test normalization and derived views of an index subset."""
    subset = IndexSubset.of(3, [3, 1])
    assert subset.members == (1, 3)
    assert subset.mask == 0b101
    assert subset.label() == "13"
    assert subset.complement() == IndexSubset.of(3, [2])
    assert subset.to_json() == [1, 3]
    assert IndexSubset.from_json(3, [1, 3]) == subset
    assert IndexSubset.from_mask(3, 0b101) == subset
    assert IndexSubset.of(12, [10, 2]).label() == "2,10"


@pytest.mark.parametrize("members", [[], [1, 2, 3], [1, 1], [0], [4]])
def test_index_subset_rejects_improper(members):
    with pytest.raises(SubsetError):
        IndexSubset.of(3, members)


def test_index_subset_json_rejects_non_integers():
    with pytest.raises(ParseError):
        IndexSubset.from_json(3, ["1"])
    with pytest.raises(ParseError):
        IndexSubset.from_json(3, 1)


def test_partition():
    partition = Partition.from_masks(3, [0b100, 0b011])
    assert partition.blocks == ((1, 2), (3,))
    assert partition.block_count == 2
    assert Partition.from_json(3, partition.to_json()) == partition

    with pytest.raises(ParseError):
        Partition(n=3, blocks=((1,), (2,)))
    with pytest.raises(ParseError):
        Partition(n=2, blocks=((1, 2), (2,)))


def test_maximal_subalgebra_json():
    subset = IndexSubset.of(2, [1])
    subalgebra = MaximalSubalgebra(
        subset=subset, pattern=Pattern.from_edges(2, [(1, 1), (1, 2), (2, 2)])
    )
    payload = subalgebra.to_json()

    assert payload["n"] == 2
    assert payload["subset"] == [1]
    assert payload["invariant_subspace"] == [1]
    assert MaximalSubalgebra.from_json(payload) == subalgebra
    with pytest.raises(ParseError):
        MaximalSubalgebra.from_json({"n": 2})
