"""Tests for digraph connectivity on patterns."""

import networkx as nx
import pytest

from src.models import golden
from src.models.pattern import Pattern
from src.services.connectivity import (
    ancestor_mask,
    minimal_strongly_connected,
    predecessor_closed_masks,
    strong_components,
    strongly_connected,
    to_digraph,
    weak_components,
    weakly_connected,
)
from src.services.pattern_semiring import is_generating
from src.utils.bitset import full_mask, loop_free_rows
from src.utils.exceptions import CapExceededError


def _loop_free(n):
    return [Pattern.trusted(n, rows) for rows in loop_free_rows(n)]


def test_strongly_connected(cycle3):
    assert strongly_connected(cycle3)
    assert not strongly_connected(Pattern.from_edges(2, [(1, 2)]))
    assert strongly_connected(Pattern.from_adjacency(golden.G3_ADJACENCY[3]))
    assert strongly_connected(Pattern.empty(1))
    # loops never help
    assert not strongly_connected(Pattern.from_edges(2, [(1, 1), (1, 2), (2, 2)]))


def test_weakly_connected():
    assert weakly_connected(Pattern.from_edges(2, [(1, 2)]))
    assert not weakly_connected(Pattern.from_edges(3, [(1, 2)]))
    assert weakly_connected(Pattern.from_edges(3, [(1, 2), (3, 2)]))
    assert not weakly_connected(Pattern.identity(2))


def test_weak_components(cycle3):
    assert weak_components(Pattern.from_edges(3, [(1, 2)])).to_json() == [[1, 2], [3]]
    assert weak_components(Pattern.empty(3)).to_json() == [[1], [2], [3]]
    assert weak_components(cycle3).to_json() == [[1, 2, 3]]
    assert weak_components(Pattern.from_edges(4, [(4, 2), (3, 1)])).to_json() == [
        [1, 3],
        [2, 4],
    ]


def test_strong_components(cycle3):
    assert strong_components(Pattern.from_edges(2, [(1, 2)])).to_json() == [[1], [2]]
    assert strong_components(cycle3).to_json() == [[1, 2, 3]]
    chain = Pattern.from_edges(3, [(1, 2), (2, 1), (2, 3)])
    assert strong_components(chain).to_json() == [[1, 2], [3]]


def test_minimal_strongly_connected(cycle3):
    assert minimal_strongly_connected(cycle3)
    assert not minimal_strongly_connected(cycle3.with_edge(1, 3))
    assert minimal_strongly_connected(Pattern.from_edges(2, golden.G2_EDGES))
    assert not minimal_strongly_connected(cycle3.with_edge(1, 1))
    assert minimal_strongly_connected(Pattern.empty(1))
    assert not minimal_strongly_connected(Pattern.from_edges(2, [(1, 2)]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_connectivity_properties_exhaustive(n):
    """Strong ⟺ generating, strong ⟹ weak, block counts, degrees of minimal graphs."""
    for g in _loop_free(n):
        strong = strongly_connected(g)
        weak = weakly_connected(g)
        assert strong == is_generating(g)
        assert not strong or weak
        assert (weak_components(g).block_count == 1) == weak
        assert (strong_components(g).block_count == 1) == strong
        if minimal_strongly_connected(g):
            assert all(row for row in g.rows)
            assert all(row for row in g.transpose().rows)


def test_connectivity_matches_networkx(rng):
    for n in range(2, 9):
        for _ in range(25):
            g = Pattern.trusted(n, [rng.getrandbits(n) for _ in range(n)])
            graph = to_digraph(g)
            assert strongly_connected(g) == nx.is_strongly_connected(graph)
            assert weakly_connected(g) == nx.is_weakly_connected(graph)


def test_connectivity_invariant_under_relabeling(rng):
    for n in range(2, 9):
        for _ in range(25):
            g = Pattern.trusted(n, [rng.getrandbits(n) for _ in range(n)])
            permutation = list(range(n))
            rng.shuffle(permutation)
            h = g.relabel(permutation)
            assert strongly_connected(g) == strongly_connected(h)
            assert weakly_connected(g) == weakly_connected(h)
            assert weak_components(g).block_count == weak_components(h).block_count


def _predecessor_closed(g, mask):
    for m in range(g.n):
        if mask >> m & 1 and any(
            g.rows[k] >> m & 1 and not mask >> k & 1 for k in range(g.n)
        ):
            return False
    return True


def test_ancestor_mask():
    chain = Pattern.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    assert [ancestor_mask(chain, v) for v in range(1, 5)] == [0b1, 0b11, 0b111, 0b1111]
    assert ancestor_mask(Pattern.identity(3), 2) == 0b10


@pytest.mark.parametrize("n", [2, 3, 4])
def test_predecessor_closed_masks_exhaustive(n):
    for g in _loop_free(n):
        expected = [m for m in range(1, full_mask(n)) if _predecessor_closed(g, m)]
        assert sorted(predecessor_closed_masks(g, 1 << n)) == expected


def test_predecessor_closed_masks_random(rng):
    for _ in range(40):
        g = Pattern.trusted(5, [rng.getrandbits(5) for _ in range(5)])
        expected = [m for m in range(1, 31) if _predecessor_closed(g, m)]
        assert sorted(predecessor_closed_masks(g, 32)) == expected


def test_predecessor_closed_masks_limit():
    assert len(predecessor_closed_masks(Pattern.empty(4), 14)) == 14
    with pytest.raises(CapExceededError):
        predecessor_closed_masks(Pattern.empty(4), 13)
    assert predecessor_closed_masks(Pattern.full(6), 1) == []
