from src.utils.bitset import (
    edge_count,
    full_mask,
    iter_bits,
    loop_free_rows,
    mask_of,
    popcount,
    reach,
    strip_diagonal,
    transpose_rows,
)


def test_mask_helpers():
    assert full_mask(3) == 0b111
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert list(iter_bits(0)) == []
    assert popcount(0b10110) == 3
    assert mask_of([0, 2]) == 0b101


def test_row_helpers():
    rows = (0b010, 0b100, 0b001)
    assert transpose_rows(rows, 3) == (0b100, 0b001, 0b010)
    assert strip_diagonal((0b011, 0b010, 0b100)) == (0b010, 0, 0)
    assert edge_count(rows) == 3


def test_reach():
    chain = (0b010, 0b100, 0)
    assert reach(chain, 0) == 0b111
    assert reach(chain, 2) == 0b100


def test_loop_free_rows():
    patterns = list(loop_free_rows(3))
    assert len(patterns) == 64
    assert len(set(patterns)) == 64
    assert all(strip_diagonal(rows) == rows for rows in patterns)
    assert list(loop_free_rows(1)) == [(0,)]
