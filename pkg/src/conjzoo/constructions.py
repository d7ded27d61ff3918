"""Builders turning constructive realization results into cohomology data.

* A group presentation whose relators are all literal squares ``w w`` gives a
  4-dimensional conjugation complex: one ``S^rho`` per generator and one
  ``2 rho``-cell per relator, attached along ``F_w . pinch . eta``.  Its real
  locus is the presentation complex.
* A 4-cell attached to a wedge of 2-spheres along ``sum eta_i + sum omega_ij``
  is doubled to an ``4 rho``-cell on a wedge of ``S^{2 rho}`` along
  ``sum nu_i + sum W_ij``.

Attaching data is symbolic; only its mod 2 shadow feeds the cohomology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import gf2
from .errors import NotAllRelatorsSquare, ParseError, UsageError
from .unstable import (
    UNIT,
    CompatibilityReport,
    DoublePair,
    UnstableAlgebra,
    check_double_pair,
    double,
    is_poincare_duality,
)

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def free_reduce(word: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(g if e == 1 else f"{g}'" for g, e in word) or "1"


def square_root(word: Word) -> Optional[Word]:
    """``w`` if ``word`` is literally ``w w``, else ``None``."""
    n = len(word)
    if n == 0 or n % 2:
        return None
    half = n // 2
    return word[:half] if word[:half] == word[half:] else None


def exponent_sums(word: Sequence[Letter], generators: Sequence[str]) -> list[int]:
    sums = {g: 0 for g in generators}
    for g, e in word:
        sums[g] += e
    return [sums[g] for g in generators]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise UsageError("duplicate generators")
        for r in self.relators:
            for g, e in r:
                if g not in self.generators:
                    raise UsageError(f"relator uses unknown generator {g!r}")
                if e not in (1, -1):
                    raise UsageError("letters carry exponent +1 or -1")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))

    @classmethod
    def parse(cls, text: str, source: str = "<presentation>") -> "GroupPresentation":
        return parse_presentation(text, source)


def parse_presentation(text: str, source: str = "<presentation>") -> GroupPresentation:
    """``gens: x y`` then one ``rel: x y x' y'`` line per relator (``x'`` is the inverse)."""
    gens: Optional[list[str]] = None
    rels: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        key, sep, rest = body.partition(":")
        key = key.strip()
        if not sep or key not in ("gens", "rel"):
            raise ParseError("expected 'gens:' or 'rel:'", lineno, 1, source)
        col0 = len(key) + 2
        if key == "gens":
            if gens is not None:
                raise ParseError("duplicate 'gens:' line", lineno, 1, source)
            gens = rest.split()
            for g in gens:
                if g.endswith("'"):
                    raise ParseError(f"generator name {g!r} may not end in a quote", lineno,
                                     col0 + rest.find(g), source)
            continue
        if gens is None:
            raise ParseError("'rel:' before 'gens:'", lineno, 1, source)
        word = []
        for tok in rest.split():
            g, e = (tok[:-1], -1) if tok.endswith("'") else (tok, 1)
            if g not in gens:
                raise ParseError(f"unknown generator {g!r}", lineno, col0 + rest.find(tok), source)
            word.append((g, e))
        if not word:
            raise ParseError("empty relator", lineno, col0, source)
        rels.append(tuple(word))
    if gens is None:
        raise ParseError("missing 'gens:' line", 1, 1, source)
    return GroupPresentation(tuple(gens), tuple(rels))


@dataclass(frozen=True)
class Cell:
    """A cell of the total space: ``rep_multiple`` copies of ``rho`` (real dimension twice that)."""

    rep_multiple: int
    name: str
    attaching: str

    @property
    def total_dimension(self) -> int:
        return 2 * self.rep_multiple

    @property
    def fixed_dimension(self) -> int:
        return self.rep_multiple

    def to_dict(self) -> dict:
        return {
            "rep": f"{self.rep_multiple}rho",
            "name": self.name,
            "attaching": self.attaching,
            "total_dim": self.total_dimension,
            "fixed_dim": self.fixed_dimension,
        }


@dataclass
class ConjugationComplexDescription:
    cells: list[Cell]
    fixed_complex: list[tuple[int, str, str]]
    cohomology_total: UnstableAlgebra
    cohomology_fixed: UnstableAlgebra
    kappa: dict[str, str]
    betti_mod2: Optional[tuple[int, ...]] = None
    boundary_mod2: list[list[int]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def pair(self) -> DoublePair:
        return DoublePair(self.cohomology_total, self.cohomology_fixed, self.kappa)

    def check(self) -> CompatibilityReport:
        return check_double_pair(self.pair)

    def half_dimension_ok(self) -> bool:
        fixed_dims = sorted(d for d, _, _ in self.fixed_complex if d > 0)
        return fixed_dims == sorted(c.fixed_dimension for c in self.cells) and all(
            2 * c.fixed_dimension == c.total_dimension for c in self.cells
        )

    def to_dict(self) -> dict:
        return {
            "cells": [c.to_dict() for c in self.cells],
            "fixed_complex": [{"dim": d, "name": n, "attaching": a} for d, n, a in self.fixed_complex],
            "betti_mod2": list(self.betti_mod2) if self.betti_mod2 is not None else None,
            "boundary_mod2": self.boundary_mod2,
            "cohomology_total": self.cohomology_total.to_dict(),
            "cohomology_fixed": self.cohomology_fixed.to_dict(),
            "kappa": self.kappa,
            "pair_check": self.check().to_dict(),
            "notes": self.notes,
        }


def build_presentation_complex(p: GroupPresentation, name: str = "X_G") -> ConjugationComplexDescription:
    roots = []
    for r in p.relators:
        w = square_root(r)
        if w is None:
            raise NotAllRelatorsSquare(format_word(r))
        roots.append(w)
    gens = list(p.generators)

    cells = [Cell(1, f"S^rho[{g}]", "basepoint") for g in gens]
    for j, w in enumerate(roots, 1):
        cells.append(Cell(2, f"e^2rho[r{j}]", f"F[{format_word(w)}] . pinch_{len(w)} . eta"))
    fixed = [(0, "e^0", "")]
    fixed += [(1, f"S^1[{g}]", "basepoint") for g in gens]
    fixed += [(2, f"e^2[r{j}]", format_word(r)) for j, r in enumerate(p.relators, 1)]

    boundary = [[s % 2 for s in exponent_sums(r, gens)] for r in p.relators]
    rows = [sum(bit << i for i, bit in enumerate(row)) for row in boundary]
    rk = gf2.rank(rows)
    betti = (1, len(gens) - rk, len(p.relators) - rk)

    # the attaching map of cell j is (sum_g n_g(w_j) iota_g) . eta, whose cofiber has
    # cup products u_g u_h = n_g n_h R_j; the real locus carries the halved ring
    root_sums = [exponent_sums(w, gens) for w in roots]
    basis = [(UNIT, 0)] + [(f"a_{g}", 1) for g in gens] + [(f"r{j}", 2) for j in range(1, len(roots) + 1)]
    mul = {}
    for i, g in enumerate(gens):
        for k in range(i, len(gens)):
            h = gens[k]
            mul[(f"a_{g}", f"a_{h}")] = [
                f"r{j}" for j, sums in enumerate(root_sums, 1) if (sums[i] * sums[k]) % 2
            ]
    fixed_alg = UnstableAlgebra(f"{name}^C2", basis, mul)
    if len(roots) == 1:
        candidate = UnstableAlgebra(fixed_alg.name, basis, mul, fundamental="r1")
        if is_poincare_duality(candidate):
            fixed_alg = candidate
    relabel = {f"a_{g}": f"u_{g}" for g in gens}
    relabel.update({f"r{j}": f"R{j}" for j in range(1, len(roots) + 1)})
    total = double(fixed_alg, name=name, relabel=relabel)
    kappa = {v: k for k, v in relabel.items()}
    kappa[UNIT] = UNIT
    return ConjugationComplexDescription(
        cells,
        fixed,
        total,
        fixed_alg,
        kappa,
        betti,
        boundary,
        notes=["relators consumed literally as squares w w; attaching data is symbolic"],
    )


@dataclass(frozen=True)
class AttachingElement:
    """Symbolic element of pi_3 of a wedge of 2-spheres: ``sum eta_i[i] eta_i + sum omega[i,j] omega_ij``.

    Indices are 1-based; the doubled element uses ``nu_i`` and ``W_ij``.
    """

    eta: dict = field(default_factory=dict)
    omega: dict = field(default_factory=dict)

    def __post_init__(self):
        omega = {}
        for (i, j), c in dict(self.omega).items():
            if i == j:
                raise UsageError("Whitehead products need two distinct spheres")
            key = (min(i, j), max(i, j))
            omega[key] = omega.get(key, 0) + int(c)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "eta", {int(i): int(c) for i, c in dict(self.eta).items()})

    def indices(self) -> set[int]:
        out = set(self.eta)
        for i, j in self.omega:
            out |= {i, j}
        return out

    def _format(self, hopf: str, bracket: str) -> str:
        terms = []
        for i in sorted(self.eta):
            c = self.eta[i]
            if c:
                terms.append(f"{c}*{hopf}{i}" if c != 1 else f"{hopf}{i}")
        for i, j in sorted(self.omega):
            c = self.omega[(i, j)]
            if c:
                terms.append(f"{c}*{bracket}{i}{j}" if c != 1 else f"{bracket}{i}{j}")
        return " + ".join(terms) or "0"

    def __str__(self) -> str:
        return self._format("eta", "omega")

    def doubled(self) -> str:
        return self._format("nu", "W")

    @classmethod
    def from_form(cls, diagonal: Sequence[int], offdiagonal: Sequence[Sequence[int]]) -> "AttachingElement":
        eta = {i: c for i, c in enumerate(diagonal, 1)}
        omega = {}
        for entry in offdiagonal:
            if len(entry) != 3:
                raise UsageError("offdiagonal entries are [i, j, coefficient]")
            i, j, c = entry
            omega[(i, j)] = omega.get((i, j), 0) + c
        return cls(eta, omega)


def parse_intersection_form(text: str, source: str = "<form>") -> tuple[int, AttachingElement]:
    """JSON ``{"diagonal": [...], "offdiagonal": [[i, j, c], ...]}`` (optional ``"spheres"``)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, source) from None
    if not isinstance(data, dict) or "diagonal" not in data:
        raise ParseError("expected an object with a 'diagonal' list", 1, 1, source)
    diagonal = data["diagonal"]
    off = data.get("offdiagonal", [])
    n = data.get("spheres", len(diagonal))
    if not all(isinstance(c, int) for c in diagonal) or not isinstance(n, int):
        raise ParseError("coefficients must be integers", 1, 1, source)
    try:
        return n, AttachingElement.from_form(diagonal, off)
    except (UsageError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), 1, 1, source) from None


def cup_form(attach: AttachingElement, num_spheres: int) -> list[list[int]]:
    """Symmetric F_2 matrix of ``x_i x_j`` coefficients on the top class."""
    m = [[0] * num_spheres for _ in range(num_spheres)]
    for i, c in attach.eta.items():
        m[i - 1][i - 1] = c % 2
    for (i, j), c in attach.omega.items():
        m[i - 1][j - 1] = m[j - 1][i - 1] = c % 2
    return m


def realize_four_complex(num_spheres: int, attach: AttachingElement, name: str = "X") -> ConjugationComplexDescription:
    if num_spheres < 0:
        raise UsageError("the number of spheres must be non-negative")
    bad = sorted(i for i in attach.indices() if not 1 <= i <= num_spheres)
    if bad:
        raise UsageError(f"attaching data refers to sphere {bad[0]} but there are {num_spheres}")
    form = cup_form(attach, num_spheres)
    xs = [f"x{i}" for i in range(1, num_spheres + 1)]
    basis = [(UNIT, 0)] + [(x, 2) for x in xs] + [("t", 4)]
    mul = {}
    for i in range(num_spheres):
        for j in range(i, num_spheres):
            mul[(xs[i], xs[j])] = ["t"] if form[i][j] else []
    fixed_alg = UnstableAlgebra(f"{name}^C2", basis, mul)
    candidate = UnstableAlgebra(fixed_alg.name, basis, mul, fundamental="t")
    if is_poincare_duality(candidate):
        fixed_alg = candidate
    relabel = {x: f"y{i}" for i, x in enumerate(xs, 1)}
    relabel["t"] = "T"
    total = double(fixed_alg, name=name, relabel=relabel)
    kappa = {v: k for k, v in relabel.items()}
    kappa[UNIT] = UNIT
    cells = [Cell(2, f"S^2rho[{i}]", "basepoint") for i in range(1, num_spheres + 1)]
    cells.append(Cell(4, "e^4rho", attach.doubled()))
    fixed = [(0, "e^0", "")]
    fixed += [(2, f"S^2[{i}]", "basepoint") for i in range(1, num_spheres + 1)]
    fixed.append((4, "e^4", str(attach)))
    notes = []
    if any(c % 2 == 0 and c for c in attach.eta.values()):
        notes.append("even Hopf coefficients vanish mod 2")
    return ConjugationComplexDescription(cells, fixed, total, fixed_alg, kappa, notes=notes)


__all__ = [
    "AttachingElement",
    "Cell",
    "ConjugationComplexDescription",
    "GroupPresentation",
    "build_presentation_complex",
    "cup_form",
    "exponent_sums",
    "format_word",
    "free_reduce",
    "parse_intersection_form",
    "parse_presentation",
    "realize_four_complex",
    "square_root",
]
