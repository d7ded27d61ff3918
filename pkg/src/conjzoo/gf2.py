"""Linear algebra over GF(2) on int bitsets.

A vector is an ``int`` whose bit ``i`` is coordinate ``i``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


def rank(rows: Iterable[int]) -> int:
    """Rank of the span of ``rows``."""
    return len(_echelon(rows))


def _echelon(rows: Iterable[int]) -> dict[int, int]:
    # pivot bit -> reduced row
    pivots: dict[int, int] = {}
    for row in rows:
        for bit, prow in pivots.items():
            if (row >> bit) & 1:
                row ^= prow
        if row:
            bit = row.bit_length() - 1
            for other in list(pivots):
                if (pivots[other] >> bit) & 1:
                    pivots[other] ^= row
            pivots[bit] = row
    return pivots


def solve_combination(target: int, rows: Sequence[int]) -> Optional[list[int]]:
    """Indices ``S`` with ``XOR(rows[i] for i in S) == target``, or ``None``.

    Row reduction carries a tag recording which input rows were combined,
    so the returned indices are a certificate checkable by direct XOR.
    """
    # bit -> (reduced row, tag of input rows used)
    pivots: dict[int, tuple[int, int]] = {}
    for idx, row in enumerate(rows):
        tag = 1 << idx
        for bit in sorted(pivots, reverse=True):
            prow, ptag = pivots[bit]
            if (row >> bit) & 1:
                row ^= prow
                tag ^= ptag
        if row:
            pivots[row.bit_length() - 1] = (row, tag)
    tag = 0
    for bit in sorted(pivots, reverse=True):
        if (target >> bit) & 1:
            prow, ptag = pivots[bit]
            target ^= prow
            tag ^= ptag
    if target:
        return None
    return [i for i in range(len(rows)) if (tag >> i) & 1]


def is_invertible(matrix: Sequence[int], ncols: int) -> bool:
    return len(matrix) == ncols and rank(matrix) == ncols


def bits(v: int) -> list[int]:
    """Positions of the set bits of ``v`` in increasing order."""
    out = []
    i = 0
    while v:
        if v & 1:
            out.append(i)
        v >>= 1
        i += 1
    return out


__all__ = ["rank", "solve_combination", "is_invertible", "bits"]
