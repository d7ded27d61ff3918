from __future__ import annotations

from hypothesis import given, strategies as st

from conjzoo import gf2
from oracles import rank_by_enumeration

rows_st = st.lists(st.integers(min_value=0, max_value=(1 << 6) - 1), max_size=6)


def _as_lists(rows, width=6):
    return [[(r >> j) & 1 for j in range(width)] for r in rows]


@given(rows_st)
def test_rank_matches_enumeration(rows):
    assert gf2.rank(rows) == (rank_by_enumeration(_as_lists(rows)) if rows else 0)


@given(rows_st, st.integers(min_value=0, max_value=(1 << 6) - 1))
def test_solve_combination_is_a_certificate(rows, target):
    combo = gf2.solve_combination(target, rows)
    in_span = gf2.rank(rows + [target]) == gf2.rank(rows)
    assert (combo is not None) == in_span
    if combo is not None:
        acc = 0
        for i in combo:
            acc ^= rows[i]
        assert acc == target


def test_invertible():
    assert gf2.is_invertible([0b01, 0b10], 2)
    assert not gf2.is_invertible([0b11, 0b11], 2)
    assert not gf2.is_invertible([0b1], 2)


def test_bits():
    assert list(gf2.bits(0b1011)) == [0, 1, 3]
