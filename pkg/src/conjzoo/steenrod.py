"""The mod 2 Steenrod algebra in the Adem (admissible monomial) basis.

A monomial ``Sq^{i_1} ... Sq^{i_k}`` is a tuple of positive ints; the empty
tuple is ``Sq^0 = 1``.  An element is a frozenset of monomials (an F_2 sum).
Normal forms are computed by rewriting the leftmost inadmissible pair
``Sq^a Sq^b`` (``a < 2b``) with the Adem relation

    Sq^a Sq^b = sum_c  binom(b - c - 1, a - 2c)  Sq^{a+b-c} Sq^c.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from . import gf2
from .errors import ParseError

Monomial = tuple[int, ...]


def binom_mod2(n: int, k: int) -> int:
    """``binom(n, k) mod 2`` by Lucas' theorem; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def degree(m: Monomial) -> int:
    return sum(m)


def is_admissible(m: Monomial) -> bool:
    return all(m[j] >= 2 * m[j + 1] for j in range(len(m) - 1))


def excess(m: Monomial) -> int:
    """``i_1 - i_2 - ... - i_k``; Sq^I kills classes of degree below its excess."""
    return m[0] - sum(m[1:]) if m else 0


def adem_relation(a: int, b: int) -> frozenset[Monomial]:
    """Right-hand side of the Adem relation for ``Sq^a Sq^b`` with ``0 < a < 2b``."""
    out: set[Monomial] = set()
    for c in range(a // 2 + 1):
        if binom_mod2(b - c - 1, a - 2 * c):
            out ^= {(a + b - c, c) if c else (a + b,)}
    return frozenset(out)


def _rewrite_once(m: Monomial, rightmost: bool) -> Optional[frozenset[Monomial]]:
    positions = range(len(m) - 2, -1, -1) if rightmost else range(len(m) - 1)
    for j in positions:
        a, b = m[j], m[j + 1]
        if a < 2 * b:
            out: set[Monomial] = set()
            for mid in adem_relation(a, b):
                out ^= {m[:j] + mid + m[j + 2:]}
            return frozenset(out)
    return None


@lru_cache(maxsize=None)
def _normalize_leftmost(m: Monomial) -> frozenset[Monomial]:
    step = _rewrite_once(m, rightmost=False)
    if step is None:
        return frozenset({m})
    out: set[Monomial] = set()
    for term in step:
        out ^= _normalize_leftmost(term)
    return frozenset(out)


def _normalize_rightmost(m: Monomial) -> frozenset[Monomial]:
    step = _rewrite_once(m, rightmost=True)
    if step is None:
        return frozenset({m})
    out: set[Monomial] = set()
    for term in step:
        out ^= _normalize_rightmost(term)
    return frozenset(out)


def normalize_monomial(m: Monomial, strategy: str = "leftmost") -> frozenset[Monomial]:
    m = tuple(i for i in m if i != 0)
    if any(i < 0 for i in m):
        raise ValueError(f"negative square in {m}")
    if strategy == "leftmost":
        return _normalize_leftmost(m)
    if strategy == "rightmost":
        return _normalize_rightmost(m)
    raise ValueError(f"unknown strategy {strategy!r}")


def _sort_key(m: Monomial):
    # higher degree first, then lexicographically larger first: Sq3 before Sq2 Sq1
    return (-degree(m), tuple(-i for i in m))


@dataclass(frozen=True)
class SteenrodElement:
    terms: frozenset[Monomial] = frozenset()

    @classmethod
    def of(cls, *monomials: Iterable[int]) -> "SteenrodElement":
        out: set[Monomial] = set()
        for m in monomials:
            out ^= {tuple(i for i in m if i != 0)}
        return cls(frozenset(out))

    @classmethod
    def sq(cls, *exponents: int) -> "SteenrodElement":
        return cls.of(exponents)

    @classmethod
    def parse(cls, text: str) -> "SteenrodElement":
        return parse_expression(text)

    def __add__(self, other: "SteenrodElement") -> "SteenrodElement":
        return SteenrodElement(self.terms ^ other.terms)

    def __mul__(self, other: "SteenrodElement") -> "SteenrodElement":
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_homogeneous(self) -> bool:
        return len({degree(m) for m in self.terms}) <= 1

    def is_admissible(self) -> bool:
        return all(is_admissible(m) for m in self.terms)

    def degrees(self) -> set[int]:
        return {degree(m) for m in self.terms}

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=_sort_key)

    def __str__(self) -> str:
        return format_element(self)


def format_monomial(m: Monomial) -> str:
    return " ".join(f"Sq{i}" for i in m) if m else "Sq0"


def format_element(e: SteenrodElement) -> str:
    if not e.terms:
        return "0"
    return " + ".join(format_monomial(m) for m in e.sorted_terms())


def adem_normalize(e: SteenrodElement, strategy: str = "leftmost") -> SteenrodElement:
    out: set[Monomial] = set()
    for m in e.terms:
        out ^= normalize_monomial(m, strategy)
    return SteenrodElement(frozenset(out))


def multiply(e1: SteenrodElement, e2: SteenrodElement) -> SteenrodElement:
    out: set[Monomial] = set()
    for m1 in e1.terms:
        for m2 in e2.terms:
            out ^= {m1 + m2}
    return adem_normalize(SteenrodElement(frozenset(out)))


def _admissible_sequences(n: int, max_first: int) -> list[Monomial]:
    # admissible sequences of total degree n whose first entry is <= max_first
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_first), 0, -1):
        for rest in _admissible_sequences(n - first, first // 2):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _admissible_basis(n: int) -> tuple[Monomial, ...]:
    return tuple(sorted(_admissible_sequences(n, n), key=_sort_key))


def admissible_basis(n: int) -> list[Monomial]:
    """All admissible monomials of degree ``n``, largest first exponent first."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return list(_admissible_basis(n))


@dataclass(frozen=True)
class Decomposition:
    """``Sq^n = sum of Sq^a Sq^b`` over ``pairs``, verified after normalization."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        lhs = " + ".join(f"Sq{a} Sq{b}" for a, b in self.pairs)
        return f"{lhs} = Sq{self.n}"


def is_decomposable(n: int) -> tuple[bool, Optional[Decomposition]]:
    """Decide whether ``Sq^n`` is a sum of products ``Sq^a Sq^b`` with ``a, b > 0``.

    Products of two squares span the decomposables in each degree (any longer
    monomial factors as ``Sq^a`` times an element of positive degree), so this
    is an exact F_2 linear solve in the admissible basis of degree ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    index = {m: i for i, m in enumerate(admissible_basis(n))}

    def vec(e: SteenrodElement) -> int:
        v = 0
        for m in e.terms:
            v |= 1 << index[m]
        return v

    pairs = [(a, n - a) for a in range(1, n)]
    rows = [vec(multiply(SteenrodElement.sq(a), SteenrodElement.sq(b))) for a, b in pairs]
    combo = gf2.solve_combination(vec(SteenrodElement.sq(n)), rows)
    if combo is None:
        return False, None
    cert = Decomposition(n, tuple(pairs[i] for i in combo))
    return True, cert


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


_SQ = re.compile(r"Sq\^?\{?(\d+)\}?")


def parse_expression(text: str) -> SteenrodElement:
    """Parse ``Sq3 Sq2 + Sq4 Sq1``.

    Terms are separated by ``+``; a term is a product of ``Sq<k>`` factors
    (``Sq^k`` and ``Sq^{k}`` are accepted too), ``1`` or ``0``.
    """
    if not text.strip():
        raise ParseError("empty expression", 1, 1)
    out: set[Monomial] = set()
    pos = 0
    for chunk in text.split("+"):
        col = pos + 1
        pos += len(chunk) + 1
        body = chunk.strip()
        if not body:
            raise ParseError("empty term", 1, col)
        offset = col + (len(chunk) - len(chunk.lstrip()))
        if body == "0":
            continue
        if body == "1":
            out ^= {()}
            continue
        factors = []
        i = 0
        while i < len(body):
            if body[i].isspace() or body[i] == "*":
                i += 1
                continue
            m = _SQ.match(body, i)
            if not m:
                raise ParseError(f"expected Sq<k> near {body[i:]!r}", 1, offset + i)
            factors.append(int(m.group(1)))
            i = m.end()
        out ^= {tuple(k for k in factors if k != 0)}
    return SteenrodElement(frozenset(out))


__all__ = [
    "Decomposition",
    "Monomial",
    "SteenrodElement",
    "adem_normalize",
    "adem_relation",
    "admissible_basis",
    "binom_mod2",
    "degree",
    "excess",
    "format_element",
    "format_monomial",
    "is_admissible",
    "is_decomposable",
    "is_power_of_two",
    "multiply",
    "normalize_monomial",
    "parse_expression",
]
