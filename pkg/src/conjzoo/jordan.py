"""The Jordan algebra of 3x3 Hermitian matrices over R, C, H or O.

A Hermitian matrix is stored as its real diagonal and its three upper
entries; the lower triangle is the conjugate transpose by construction::

    [ alpha   x      z   ]
    [ x*      beta   y   ]
    [ z*      y*     gamma ]

Trace-one projectors (``p o p = p``) model the projective plane.  The
coefficient-wise ``tau`` acts on them, and the three strata
``gamma = beta = 0``, ``gamma = 0``, ``gamma != 0`` give the cells of the
plane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cayley_dickson import MAX_LEVEL, CDElement, parse_element
from .errors import DomainError, ParseError, UsageError

# (row, column) of the stored upper entries x, y, z
UPPER_POSITIONS = ((0, 1), (1, 2), (0, 2))


@dataclass(frozen=True)
class HermitianMatrix:
    level: int
    diag: tuple[Fraction, Fraction, Fraction]
    upper: tuple[CDElement, CDElement, CDElement]

    def __post_init__(self):
        diag = tuple(Fraction(d) for d in self.diag)
        if len(diag) != 3 or len(self.upper) != 3:
            raise UsageError("a 3x3 Hermitian matrix needs 3 diagonal and 3 upper entries")
        if any(u.level != self.level for u in self.upper):
            raise UsageError("upper entries must live at the matrix level")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "upper", tuple(self.upper))

    @classmethod
    def from_entries(cls, level, alpha, beta, gamma, x=None, y=None, z=None) -> "HermitianMatrix":
        zero = CDElement.zero(level)
        return cls(level, (alpha, beta, gamma), (x or zero, y or zero, z or zero))

    @classmethod
    def diagonal(cls, level: int, alpha, beta, gamma) -> "HermitianMatrix":
        return cls.from_entries(level, alpha, beta, gamma)

    @classmethod
    def identity(cls, level: int) -> "HermitianMatrix":
        return cls.diagonal(level, 1, 1, 1)

    @classmethod
    def from_full(cls, level: int, m: Sequence[Sequence[CDElement]]) -> "HermitianMatrix":
        """Build from a full 3x3 array, checking Hermitian symmetry exactly."""
        for i in range(3):
            if not m[i][i].is_real():
                raise DomainError(f"diagonal entry ({i}, {i}) is not real: {m[i][i]}")
            for j in range(i + 1, 3):
                if m[j][i] != m[i][j].conj():
                    raise DomainError(f"entries ({i}, {j}) and ({j}, {i}) are not conjugate")
        return cls(
            level,
            tuple(m[i][i].real for i in range(3)),
            tuple(m[i][j] for i, j in UPPER_POSITIONS),
        )

    @property
    def x(self) -> CDElement:
        return self.upper[0]

    @property
    def y(self) -> CDElement:
        return self.upper[1]

    @property
    def z(self) -> CDElement:
        return self.upper[2]

    @property
    def alpha(self) -> Fraction:
        return self.diag[0]

    @property
    def beta(self) -> Fraction:
        return self.diag[1]

    @property
    def gamma(self) -> Fraction:
        return self.diag[2]

    def full(self) -> list[list[CDElement]]:
        lv = self.level
        m = [[CDElement.zero(lv)] * 3 for _ in range(3)]
        for i in range(3):
            m[i][i] = CDElement.of(lv, self.diag[i])
        for (i, j), u in zip(UPPER_POSITIONS, self.upper):
            m[i][j] = u
            m[j][i] = u.conj()
        return m

    def trace(self) -> Fraction:
        return sum(self.diag, Fraction(0))

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        _same_level(self, other)
        return HermitianMatrix(
            self.level,
            tuple(a + b for a, b in zip(self.diag, other.diag)),
            tuple(a + b for a, b in zip(self.upper, other.upper)),
        )

    def scale(self, c) -> "HermitianMatrix":
        c = Fraction(c)
        return HermitianMatrix(self.level, tuple(d * c for d in self.diag), tuple(u * c for u in self.upper))

    def tau(self) -> "HermitianMatrix":
        return matrix_tau(self)

    def __str__(self) -> str:
        a, b, g = self.diag
        return f"diag({a}, {b}, {g}); x = {self.x}; y = {self.y}; z = {self.z}"


def _same_level(a: HermitianMatrix, b: HermitianMatrix):
    if a.level != b.level:
        raise UsageError(f"level mismatch: {a.level} vs {b.level}")


def _matmul(a, b, level):
    zero = CDElement.zero(level)
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = zero
            for k in range(3):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def jordan_mul(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """``a o b = (ab + ba) / 2`` in exact Cayley-Dickson arithmetic."""
    _same_level(a, b)
    if a.level > MAX_LEVEL:
        raise UsageError("coefficients beyond the octonions are not supported")
    fa, fb = a.full(), b.full()
    ab = _matmul(fa, fb, a.level)
    ba = _matmul(fb, fa, a.level)
    sym = [[(ab[i][j] + ba[i][j]) / 2 for j in range(3)] for i in range(3)]
    return HermitianMatrix.from_full(a.level, sym)


def is_projector(p: HermitianMatrix) -> bool:
    return jordan_mul(p, p) == p


def in_projective_plane(p: HermitianMatrix) -> bool:
    return p.trace() == 1 and is_projector(p)


def matrix_tau(p: HermitianMatrix) -> HermitianMatrix:
    return HermitianMatrix(p.level, p.diag, tuple(u.tau() for u in p.upper))


def is_tau_fixed(p: HermitianMatrix) -> bool:
    return matrix_tau(p) == p


class CellKind(enum.Enum):
    ZeroCell = "ZeroCell"
    SphereCell = "SphereCell"
    OpenTopCell = "OpenTopCell"


@dataclass(frozen=True)
class Stratum:
    tag: CellKind
    dimension: int

    def __str__(self) -> str:
        return f"{self.tag.value} (dim {self.dimension})"


def classify_stratum(p: HermitianMatrix) -> Stratum:
    """Cell of the projective plane containing ``p``.

    The 0-cell is the single trace-one projector ``diag(1, 0, 0)`` cut out by
    ``beta = gamma = 0``; ``gamma = 0`` alone gives the closed ``r``-cell
    (``r`` the real dimension of the coefficients), and ``gamma != 0`` the
    open ``2r``-cell.
    """
    if not in_projective_plane(p):
        raise DomainError("classify_stratum expects a trace-one projector")
    r = 1 << p.level
    if p.gamma != 0:
        return Stratum(CellKind.OpenTopCell, 2 * r)
    if p.beta != 0:
        return Stratum(CellKind.SphereCell, r)
    return Stratum(CellKind.ZeroCell, 0)


def rank_one(v: Sequence[CDElement]) -> HermitianMatrix:
    """The matrix ``v v*`` with entries ``v_i conj(v_j)``.

    Only offered over associative coefficients (level <= 2).
    """
    if len(v) != 3:
        raise UsageError("rank_one needs a vector of length 3")
    level = v[0].level
    if level > 2:
        raise UsageError("rank-one construction is only offered over R, C and H")
    m = [[v[i] * v[j].conj() for j in range(3)] for i in range(3)]
    return HermitianMatrix.from_full(level, m)


def parse_matrix(text: str, source: str = "<matrix>") -> HermitianMatrix:
    """Read the matrix file format.

    Five meaningful lines (``#`` starts a comment): the level, the three
    diagonal rationals, then the entries x (1,2), y (2,3) and z (1,3).
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if len(lines) != 5:
        raise ParseError(
            f"expected 5 lines (level, diagonal, x, y, z), found {len(lines)}",
            lines[-1][0] if lines else 1,
            1,
            source,
        )
    lineno, body = lines[0]
    try:
        level = int(body.strip())
    except ValueError:
        raise ParseError(f"level must be an integer, got {body.strip()!r}", lineno, 1, source) from None
    if not 0 <= level <= MAX_LEVEL:
        raise ParseError(f"level must be in 0..{MAX_LEVEL}", lineno, 1, source)
    lineno, body = lines[1]
    fields = body.split()
    if len(fields) != 3:
        raise ParseError("expected three diagonal entries", lineno, 1, source)
    try:
        diag = tuple(Fraction(f) for f in fields)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational in {body.strip()!r}", lineno, 1, source) from None
    upper = []
    for lineno, body in lines[2:]:
        try:
            upper.append(parse_element(body, level))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column, source) from None
    return HermitianMatrix(level, diag, tuple(upper))


def format_matrix_file(p: HermitianMatrix) -> str:
    return "\n".join(
        [str(p.level), " ".join(str(d) for d in p.diag)] + [str(u) for u in p.upper]
    ) + "\n"


__all__ = [
    "CellKind",
    "HermitianMatrix",
    "Stratum",
    "classify_stratum",
    "format_matrix_file",
    "in_projective_plane",
    "is_projector",
    "is_tau_fixed",
    "jordan_mul",
    "matrix_tau",
    "parse_matrix",
    "rank_one",
]
