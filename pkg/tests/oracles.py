"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb


def span_size(rows: list[list[int]]) -> int:
    """Number of distinct F_2 combinations of the rows (enumerated, not reduced)."""
    n = len(rows[0]) if rows else 0
    seen = set()
    for coeffs in itertools.product((0, 1), repeat=len(rows)):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % 2 for j in range(n))
        seen.add(v)
    return len(seen)


def rank_by_enumeration(rows: list[list[int]]) -> int:
    return span_size(rows).bit_length() - 1


def betti_oracle(boundary: list[list[int]], num_gens: int) -> tuple[int, int, int]:
    """Betti numbers of a one-vertex 2-complex from the mod 2 boundary matrix d2 (rows = 2-cells).

    d1 vanishes since every 1-cell is a loop, so b1 = #gens - rank d2 and b2 = dim ker d2.
    """
    kernel = 0
    for coeffs in itertools.product((0, 1), repeat=len(boundary)):
        if all(sum(c * row[j] for c, row in zip(coeffs, boundary)) % 2 == 0 for j in range(num_gens)):
            kernel += 1
    b2 = kernel.bit_length() - 1
    rank = len(boundary) - b2
    return 1, num_gens - rank, b2


@lru_cache(maxsize=None)
def admissible_count_oracle(n: int) -> int:
    """Dimension of the Steenrod algebra in degree n: partitions of n into parts 2^k - 1."""
    parts = [2 ** k - 1 for k in range(1, n.bit_length() + 2) if 2 ** k - 1 <= n]
    ways = [1] + [0] * n
    for p in parts:
        for m in range(p, n + 1):
            ways[m] += ways[m - p]
    return ways[n]


def adem_coefficients(a: int, b: int) -> dict[tuple[int, ...], int]:
    """Adem relation with binomials computed by math.comb (not Lucas)."""
    out: dict[tuple[int, ...], int] = {}
    for c in range(a // 2 + 1):
        top = b - c - 1
        coeff = comb(top, a - 2 * c) % 2 if top >= 0 and a - 2 * c <= top else 0
        if coeff:
            key = (a + b - c, c) if c else (a + b,)
            out[key] = 1
    return out


def sq_matrix(A, k: int) -> dict[str, frozenset]:
    """Sq^k as a raw map on basis labels, read off the algebra's tables."""
    return {b: A.sq_basis(k, b) if k else frozenset({b}) for b in A.labels}


def compose(A, ks: tuple[int, ...], label: str) -> frozenset:
    """Apply Sq^{k_1} ... Sq^{k_r} (rightmost first) via raw matrices."""
    v = frozenset({label})
    for k in reversed(ks):
        m = sq_matrix(A, k)
        out: set = set()
        for b in v:
            out ^= m[b]
        v = frozenset(out)
    return v


def adem_violations(A) -> list[tuple[int, int, str]]:
    """Every (a, b, label) where Sq^a Sq^b disagrees with its Adem expansion on the raw tables."""
    bad = []
    top = A.top_degree
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            if a >= 2 * b or a + b > top:
                continue
            rhs = adem_coefficients(a, b)
            for label in A.labels:
                lhs = compose(A, (a, b), label)
                acc: set = set()
                for mono in rhs:
                    acc ^= compose(A, mono, label)
                if lhs != frozenset(acc):
                    bad.append((a, b, label))
    return bad


def projective_sw(n: int) -> list[int]:
    """Coefficients of (1 + x)^{n+1} mod 2 in degrees 0..n."""
    return [comb(n + 1, i) % 2 for i in range(n + 1)]
