"""Exact arithmetic in the Cayley-Dickson tower R, C, H, O.

Elements of the level-``k`` algebra carry ``2**k`` rational coordinates; the
first half and the second half are the pair ``(a, b)`` of the doubling.  The
product is

    (a, b)(c, d) = (ac - d conj(b), conj(a) d + c b)

which makes ``(1, 0)`` a two-sided unit.  Besides the algebra conjugation
there is a second involution ``tau``: complex conjugation on C, extended
diagonally ``tau(a, b) = (tau(a), tau(b))``.  In coordinates it negates every
odd-indexed coordinate, so its fixed subalgebra is spanned by ``e_0, e_2, ...``.

Everything is exact; no floating point is used anywhere.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DomainError, ParseError, UsageError

MAX_LEVEL = 3
NAMES = {0: "R", 1: "C", 2: "H", 3: "O"}

Rational = Union[int, Fraction]
Coords = tuple[Fraction, ...]


def _conj(a: Coords) -> Coords:
    if len(a) == 1:
        return a
    h = len(a) // 2
    return _conj(a[:h]) + tuple(-t for t in a[h:])


def _tau(a: Coords) -> Coords:
    return tuple(-t if i % 2 else t for i, t in enumerate(a))


def _add(a: Coords, b: Coords) -> Coords:
    return tuple(s + t for s, t in zip(a, b))


def _sub(a: Coords, b: Coords) -> Coords:
    return tuple(s - t for s, t in zip(a, b))


def _mul(x: Coords, y: Coords) -> Coords:
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    return _sub(_mul(a, c), _mul(d, _conj(b))) + _add(_mul(_conj(a), d), _mul(c, b))


@dataclass(frozen=True)
class CDElement:
    level: int
    coords: Coords

    def __post_init__(self):
        if not 0 <= self.level <= MAX_LEVEL:
            raise UsageError(f"level must be in 0..{MAX_LEVEL}, got {self.level}")
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != 1 << self.level:
            raise UsageError(
                f"level {self.level} needs {1 << self.level} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, level: int, *coords: Rational) -> "CDElement":
        """Pad ``coords`` with zeros up to the dimension of ``level``."""
        dim = 1 << level
        if len(coords) > dim:
            raise UsageError(f"too many coordinates for level {level}")
        return cls(level, tuple(coords) + (0,) * (dim - len(coords)))

    @classmethod
    def zero(cls, level: int) -> "CDElement":
        return cls.of(level)

    @classmethod
    def one(cls, level: int) -> "CDElement":
        return cls.of(level, 1)

    @classmethod
    def basis(cls, level: int, index: int) -> "CDElement":
        dim = 1 << level
        if not 0 <= index < dim:
            raise UsageError(f"e{index} does not exist at level {level}")
        return cls(level, tuple(1 if i == index else 0 for i in range(dim)))

    @classmethod
    def parse(cls, text: str, level: Optional[int] = None) -> "CDElement":
        return parse_element(text, level)

    @property
    def dim(self) -> int:
        return 1 << self.level

    @property
    def real(self) -> Fraction:
        return self.coords[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_real(self) -> bool:
        return not any(self.coords[1:])

    def _check(self, other: "CDElement"):
        if not isinstance(other, CDElement):
            raise UsageError(f"expected a CDElement, got {type(other).__name__}")
        if other.level != self.level:
            raise UsageError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "CDElement") -> "CDElement":
        self._check(other)
        return CDElement(self.level, _add(self.coords, other.coords))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._check(other)
        return CDElement(self.level, _sub(self.coords, other.coords))

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-c for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CDElement(self.level, tuple(c * other for c in self.coords))
        self._check(other)
        return CDElement(self.level, _mul(self.coords, other.coords))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CDElement(self.level, tuple(other * c for c in self.coords))
        return NotImplemented

    def __truediv__(self, scalar: Rational) -> "CDElement":
        return CDElement(self.level, tuple(c / scalar for c in self.coords))

    def conj(self) -> "CDElement":
        return CDElement(self.level, _conj(self.coords))

    def tau(self) -> "CDElement":
        return CDElement(self.level, _tau(self.coords))

    def norm(self) -> Fraction:
        """Squared Euclidean norm, i.e. the real part of ``a * conj(a)``."""
        return sum((c * c for c in self.coords), Fraction(0))

    def inv(self) -> "CDElement":
        n = self.norm()
        if n == 0:
            raise DomainError("zero has no inverse")
        return self.conj() / n

    def embed(self, level: int) -> "CDElement":
        """Image under the inclusion ``a -> (a, 0)`` into a higher level."""
        if level < self.level:
            raise UsageError("can only embed into a higher level")
        return CDElement.of(level, *self.coords)

    def __str__(self) -> str:
        return format_element(self)


def format_element(a: CDElement) -> str:
    parts: list[str] = []
    for i, c in enumerate(a.coords):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif mag == 1:
            body = f"e{i}"
        else:
            body = f"{mag}*e{i}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<unit1>e\d+))?|(?P<unit2>e\d+))\s*"
)


def parse_element(text: str, level: Optional[int] = None) -> CDElement:
    """Parse ``q0 + q1*e1 - e3 + 2/3*e7``; the level defaults to the smallest that fits."""
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty element", 1, 1)
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("unit2") is None):
            raise ParseError(f"cannot parse element term near {text[pos:]!r}", 1, pos + 1)
        if not first and m.group("sign") is None:
            raise ParseError("expected '+' or '-' between terms", 1, pos + 1)
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise ParseError("zero denominator", 1, m.start("coef") + 1) from None
        unit = m.group("unit1") or m.group("unit2")
        index = int(unit[1:]) if unit else 0
        if index >= 1 << MAX_LEVEL:
            raise ParseError(f"e{index} is beyond the octonions", 1, m.start() + 1)
        coeffs[index] = coeffs.get(index, Fraction(0)) + sign * coef
        pos = m.end()
    needed = max(coeffs, default=0).bit_length()
    if level is None:
        level = needed
    elif needed > level:
        raise ParseError(f"e{max(coeffs)} does not exist at level {level}", 1, 1)
    return CDElement.of(level, *[coeffs.get(i, Fraction(0)) for i in range(1 << level)])


def cd_add(a: CDElement, b: CDElement) -> CDElement:
    return a + b


def cd_mul(a: CDElement, b: CDElement) -> CDElement:
    return a * b


def cd_conj(a: CDElement) -> CDElement:
    return a.conj()


def cd_tau(a: CDElement) -> CDElement:
    return a.tau()


def cd_norm(a: CDElement) -> Fraction:
    return a.norm()


def cd_inv(a: CDElement) -> CDElement:
    return a.inv()


def multiplication_table(level: int) -> list[list[CDElement]]:
    """``table[i][j] = e_i * e_j``."""
    basis = [CDElement.basis(level, i) for i in range(1 << level)]
    return [[x * y for y in basis] for x in basis]


def associator(a: CDElement, b: CDElement, c: CDElement) -> CDElement:
    return (a * b) * c - a * (b * c)


def non_associative_triple(level: int) -> Optional[tuple[int, int, int]]:
    """First basis triple ``(i, j, k)`` with a nonzero associator, if any."""
    dim = 1 << level
    basis = [CDElement.basis(level, i) for i in range(dim)]
    for i, j, k in itertools.product(range(dim), repeat=3):
        if not associator(basis[i], basis[j], basis[k]).is_zero():
            return i, j, k
    return None


# -- the tau-fixed subalgebra ------------------------------------------------


def is_tau_fixed(a: CDElement) -> bool:
    return a.tau() == a


def fixed_subalgebra_basis(level: int) -> list[CDElement]:
    """Basis of ``{x : tau(x) = x}`` obtained by solving the fixed-point system.

    ``tau`` is diagonal in the standard basis with entries +-1, so the
    solution space is spanned by the basis vectors whose eigenvalue is +1.
    """
    if not 1 <= level <= MAX_LEVEL:
        raise UsageError(f"level must be in 1..{MAX_LEVEL}")
    out = []
    for i in range(1 << level):
        e = CDElement.basis(level, i)
        if e.tau() - e == CDElement.zero(level):
            out.append(e)
    return out


def _span_coords(vectors: Sequence[CDElement], x: CDElement) -> Optional[list[Fraction]]:
    # vectors are distinct standard basis elements, so coordinates read off directly
    idx = [v.coords.index(1) for v in vectors]
    if any(c != 0 for i, c in enumerate(x.coords) if i not in idx):
        return None
    return [x.coords[i] for i in idx]


def is_closed_under_multiplication(vectors: Sequence[CDElement]) -> bool:
    return all(_span_coords(vectors, a * b) is not None for a in vectors for b in vectors)


@dataclass(frozen=True)
class SignedPermutation:
    """Linear map sending ``e_j`` of the source to ``signs[j] * target[perm[j]]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def apply(self, x: CDElement, target: Sequence[CDElement]) -> CDElement:
        out = target[0] * 0
        for j, c in enumerate(x.coords):
            if c:
                out = out + target[self.perm[j]] * (c * self.signs[j])
        return out


def fixed_subalgebra_isomorphism(level: int) -> Optional[SignedPermutation]:
    """Brute-force an algebra isomorphism from level ``level - 1`` onto the fixed subalgebra.

    Candidates are unit-preserving signed permutations of the standard bases;
    each is checked on every pair of basis elements.
    """
    target = fixed_subalgebra_basis(level)
    src_level = level - 1
    m = 1 << src_level
    src = [CDElement.basis(src_level, i) for i in range(m)]
    for perm_tail in itertools.permutations(range(1, m)):
        perm = (0,) + perm_tail
        for sign_tail in itertools.product((1, -1), repeat=m - 1):
            phi = SignedPermutation(perm, (1,) + sign_tail)
            if all(
                phi.apply(src[i] * src[j], target) == phi.apply(src[i], target) * phi.apply(src[j], target)
                for i in range(m)
                for j in range(m)
            ):
                return phi
    return None


# -- projective lines ---------------------------------------------------------


@dataclass(frozen=True)
class ProjectivePoint:
    """Normalized representative of a line ``[x, y]`` in ``K^2``.

    Either ``y == 1`` (affine chart) or ``(x, y) == (1, 0)`` (the point at infinity).
    """

    x: CDElement
    y: CDElement

    @property
    def level(self) -> int:
        return self.x.level

    @property
    def at_infinity(self) -> bool:
        return self.y.is_zero()

    def __str__(self) -> str:
        return "inf" if self.at_infinity else f"[{self.x} : 1]"


def line_normalize(x: CDElement, y: CDElement) -> ProjectivePoint:
    """Canonical representative ``(y^-1 x, 1)`` of the line of left multiples of ``(x, y)``.

    The line through ``(x, y)`` is ``{(l u, l) : l != 0}`` with ``u = y^-1 x``.
    """
    x._check(y)
    if x.is_zero() and y.is_zero():
        raise DomainError("(0, 0) does not span a line")
    level = x.level
    if y.is_zero():
        return ProjectivePoint(CDElement.one(level), CDElement.zero(level))
    return ProjectivePoint(y.inv() * x, CDElement.one(level))


def hopf_map(x: CDElement, y: CDElement) -> ProjectivePoint:
    """The Hopf map ``S(K^2) -> KP^1``; the pair is scaled to the sphere implicitly."""
    if x.norm() + y.norm() == 0:
        raise DomainError("hopf_map needs a nonzero pair")
    return line_normalize(x, y)


def line_tau(p: ProjectivePoint) -> ProjectivePoint:
    return line_normalize(p.x.tau(), p.y.tau())


def line_is_tau_fixed(p: ProjectivePoint) -> bool:
    return line_tau(p) == p


__all__ = [
    "CDElement",
    "ProjectivePoint",
    "SignedPermutation",
    "associator",
    "cd_add",
    "cd_conj",
    "cd_inv",
    "cd_mul",
    "cd_norm",
    "cd_tau",
    "fixed_subalgebra_basis",
    "fixed_subalgebra_isomorphism",
    "format_element",
    "hopf_map",
    "is_closed_under_multiplication",
    "is_tau_fixed",
    "line_is_tau_fixed",
    "line_normalize",
    "line_tau",
    "multiplication_table",
    "non_associative_triple",
    "parse_element",
]
