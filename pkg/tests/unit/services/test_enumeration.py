"""Tests for minimal strongly connected digraph enumeration."""

from math import factorial

import networkx as nx
import pytest

from config.settings import reset_settings
from src.models import golden
from src.models.pattern import Pattern
from src.services.connectivity import minimal_strongly_connected, to_digraph
from src.services.enumeration import (
    EnumerationService,
    canonical_form,
    collapse_classes,
    enumerate_minimal_scc,
    first_rows,
    isomorphism_class_representatives,
    max_edges_for,
    observed_edge_counts,
    orbit,
    pattern_from_code,
    rows_code,
    search_partition,
    verify_edge_bound,
)
from src.services.pattern_semiring import is_generating
from src.utils.exceptions import CapExceededError, IndexRangeError

G3 = [Pattern.from_adjacency(m) for m in golden.G3_ADJACENCY]


def test_canonical_form_examples():
    """Both 3-cycles share a code, as do both doubled stars."""
    assert canonical_form(G3[0]) == canonical_form(G3[1])
    assert canonical_form(G3[3]) == canonical_form(G3[4])
    assert canonical_form(G3[2]) == canonical_form(G3[3])
    assert canonical_form(G3[0]) != canonical_form(G3[2])

    form = canonical_form(G3[0])
    assert canonical_form(form.to_pattern()) == form
    assert len(form.code) == 9


def test_canonical_form_is_least_code():
    form = canonical_form(Pattern.from_edges(2, [(1, 2)]))
    assert form.code == "0010"
    assert form.to_pattern().edges() == [(2, 1)]


def test_canonical_form_cap(monkeypatch):
    monkeypatch.setenv("MATALG_PERMUTATION_CAP", "3")
    reset_settings()
    with pytest.raises(CapExceededError):
        canonical_form(Pattern.empty(4))


def test_canonical_form_matches_networkx_isomorphism(rng):
    for n in range(2, 6):
        for _ in range(15):
            g = Pattern.trusted(n, [rng.getrandbits(n) & ~(1 << k) for k in range(n)])
            h = Pattern.trusted(n, [rng.getrandbits(n) & ~(1 << k) for k in range(n)])
            same = canonical_form(g) == canonical_form(h)
            assert same == nx.is_isomorphic(to_digraph(g), to_digraph(h))

            permutation = list(range(n))
            rng.shuffle(permutation)
            assert canonical_form(g.relabel(permutation)) == canonical_form(g)


def test_code_round_trip():
    for g in G3:
        assert pattern_from_code(rows_code(g.rows, 3), 3) == g
    assert rows_code(G3[0].rows, 3) == int("001100010", 2)


def test_orbit():
    orbit_of_cycle = orbit(G3[0])
    assert len(orbit_of_cycle) == 2
    assert set(orbit_of_cycle) == {G3[0], G3[1]}
    assert len(orbit(G3[3])) == 3


@pytest.mark.parametrize("n,expected", sorted(golden.LABELED_COUNTS.items())[:5])
def test_labeled_counts(n, expected):
    assert enumerate_minimal_scc(n).count == expected


@pytest.mark.parametrize("n,expected", sorted(golden.UNLABELED_COUNTS.items())[:5])
def test_unlabeled_counts(n, expected):
    assert enumerate_minimal_scc(n, labeled=False).count == expected


@pytest.mark.slow
def test_unlabeled_count_six():
    assert enumerate_minimal_scc(6, labeled=False).count == golden.UNLABELED_COUNTS[6]


def test_labeled_stream_for_three_is_the_published_list():
    result = enumerate_minimal_scc(3, stream=True)
    assert set(result.patterns) == set(G3)
    assert len(result.patterns) == 5
    # edge count ascending, then bit order
    assert [p.edge_count() for p in result.patterns] == [3, 3, 4, 4, 4]


def test_unlabeled_representatives_for_four():
    representatives = isomorphism_class_representatives(4)
    published = {canonical_form(Pattern.from_adjacency(m)) for m in golden.N4_CLASS_ADJACENCY}
    assert {canonical_form(p) for p in representatives} == published
    assert all(canonical_form(p).to_pattern() == p for p in representatives)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_streamed_patterns_are_minimal_and_generating(n):
    result = enumerate_minimal_scc(n, stream=True)
    assert len(result.patterns) == result.count
    assert len(set(result.patterns)) == result.count
    for g in result.patterns:
        assert minimal_strongly_connected(g)
        assert is_generating(g)
        assert n <= g.edge_count() <= max_edges_for(n)


def test_streamed_patterns_sampled_for_five(rng):
    patterns = enumerate_minimal_scc(5, stream=True).patterns
    for g in rng.sample(list(patterns), 100):
        assert minimal_strongly_connected(g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbit_sizes_sum_to_labeled_count(n):
    """Σ n!/|Aut| over classes equals the labeled count."""
    labeled = enumerate_minimal_scc(n, stream=True)
    classes = collapse_classes((p.rows for p in labeled.patterns), n)
    assert len(classes) == golden.UNLABELED_COUNTS[n]
    assert sum(size for _, size in classes) == labeled.count
    assert all(factorial(n) % size == 0 for _, size in classes)


def test_partitions_cover_search_space():
    n = 4
    max_edges = max_edges_for(n)
    total = sum(len(search_partition(n, row, max_edges, False)) for row in first_rows(n, max_edges))
    assert total == golden.LABELED_COUNTS[n]


def test_enumeration_range():
    with pytest.raises(IndexRangeError):
        enumerate_minimal_scc(0)
    with pytest.raises(CapExceededError):
        enumerate_minimal_scc(7)
    with pytest.raises(CapExceededError):
        enumerate_minimal_scc(7, labeled=False)

    trivial = enumerate_minimal_scc(1, stream=True)
    assert trivial.count == 1
    assert trivial.patterns == (Pattern.empty(1),)


def test_edge_bound():
    assert observed_edge_counts(2) == golden.EDGE_COUNTS[2]
    assert observed_edge_counts(3) == golden.EDGE_COUNTS[3]
    assert verify_edge_bound(1)
    assert verify_edge_bound(2)
    assert verify_edge_bound(3)
    with pytest.raises(CapExceededError):
        observed_edge_counts(5)


@pytest.mark.slow
def test_edge_bound_four():
    assert observed_edge_counts(4) <= {4, 5, 6}
    assert verify_edge_bound(4)


@pytest.mark.asyncio
async def test_service_matches_inline_search():
    service = EnumerationService(workers=1)
    for n in range(1, 5):
        assert (await service.enumerate(n)).count == golden.LABELED_COUNTS[n]
        assert (await service.enumerate(n, labeled=False)).count == golden.UNLABELED_COUNTS[n]


@pytest.mark.slow
async def test_service_counts_independent_of_workers():
    inline = await EnumerationService(workers=1).enumerate(5, stream=True)
    pooled = await EnumerationService(workers=2).enumerate(5, stream=True)
    assert pooled.count == inline.count == golden.LABELED_COUNTS[5]
    assert pooled.patterns == inline.patterns


@pytest.mark.asyncio
async def test_count_table():
    table = await EnumerationService(workers=1).count_table(4)
    assert table.column("labeled") == [golden.LABELED_COUNTS[n] for n in range(1, 5)]
    assert table.column("unlabeled") == [golden.UNLABELED_COUNTS[n] for n in range(1, 5)]
    assert all(row.seconds >= 0 for row in table.rows)

    labeled_only = await EnumerationService(workers=1).count_table(3, unlabeled=False)
    assert labeled_only.column("unlabeled") == [None, None, None]
