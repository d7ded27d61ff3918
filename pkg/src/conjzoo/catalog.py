"""Registry of example spaces with the verdicts the checks are expected to reproduce.

An entry is one cohomology algebra.  A pair ties a total-space entry to a
fixed-locus entry with the degree-halving bijection ``kappa``; pairs flagged
``conjugation_space=True`` are known conjugation spaces and are what lets
:func:`check_realizable` answer ``Realizable``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .algfile import format_alg, parse_alg
from .constructions import build_presentation_complex, parse_presentation, realize_four_complex, AttachingElement
from .errors import ConjzooError, UsageError
from .obstructions import RealizabilityReport, check_realizable
from .unstable import (
    UNIT,
    DoublePair,
    UnstableAlgebra,
    check_double_pair,
    double,
    find_isomorphism,
    format_total_class,
    halve,
    is_isomorphic,
    is_poincare_duality,
    projective_space,
    sphere,
    sw_classes,
    truncated_polynomial,
    validate,
    wu_classes,
)

MAX_PROJECTIVE = 6


@dataclass
class CatalogEntry:
    name: str
    algebra: UnstableAlgebra
    expected: str  # "Realizable", "Undetermined", "NonRealizable:<rule>"
    notes: list[str] = field(default_factory=list)
    ring_only: bool = False
    double: Optional[str] = None  # entry whose algebra is the double of this one
    wu: Optional[str] = None
    sw: Optional[str] = None

    def summary(self) -> dict:
        return {
            "name": self.name,
            "dims": {str(d): n for d, n in self.algebra.dims().items()},
            "poincare_duality": self.algebra.fundamental is not None,
            "ring_only": self.ring_only,
            "expected": self.expected,
            "double": self.double,
            "notes": self.notes,
        }


@dataclass
class CatalogPair:
    name: str
    total: str
    fixed: str
    kappa: dict[str, str]
    conjugation_space: Optional[bool]  # None: unknown
    notes: list[str] = field(default_factory=list)
    ring_only: bool = False

    def summary(self) -> dict:
        status = {True: "conjugation space", False: "not a conjugation space", None: "unknown"}
        return {
            "name": self.name,
            "total": self.total,
            "fixed": self.fixed,
            "status": status[self.conjugation_space],
            "notes": self.notes,
        }


@dataclass
class EntryResult:
    name: str
    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.ok,
            "checks": [{"check": c, "pass": ok, "detail": d} for c, ok, d in self.checks],
        }

    def __str__(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        return "\n".join([head] + [f"  {'ok ' if ok else 'BAD'} {c}: {d}" for c, ok, d in self.checks])


class Catalog:
    def __init__(self):
        self.entries: dict[str, CatalogEntry] = {}
        self.pairs: dict[str, CatalogPair] = {}

    def add(self, entry: CatalogEntry) -> CatalogEntry:
        if entry.name in self.entries:
            raise UsageError(f"duplicate catalog entry {entry.name}")
        self.entries[entry.name] = entry
        return entry

    def add_pair(self, pair: CatalogPair) -> CatalogPair:
        if pair.name in self.pairs:
            raise UsageError(f"duplicate catalog pair {pair.name}")
        for n in (pair.total, pair.fixed):
            if n not in self.entries:
                raise UsageError(f"pair {pair.name} refers to unknown entry {n}")
        self.pairs[pair.name] = pair
        return pair

    def __getitem__(self, name: str) -> CatalogEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise UsageError(f"unknown catalog entry {name!r}") from None

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries.values())

    def names(self) -> list[str]:
        return list(self.entries) + [p for p in self.pairs if p not in self.entries]

    def double_pair(self, pair: CatalogPair) -> DoublePair:
        return DoublePair(self[pair.total].algebra, self[pair.fixed].algebra, pair.kappa)

    def known_real_locus(self, B: UnstableAlgebra, ring_only: bool = False) -> Optional[CatalogPair]:
        """First known conjugation space whose fixed algebra is isomorphic to ``B``."""
        for pair in self.pairs.values():
            if not pair.conjugation_space:
                continue
            fixed = self[pair.fixed]
            if B.dims() != fixed.algebra.dims():
                continue
            if is_isomorphic(B, fixed.algebra, ring_only=ring_only or fixed.ring_only):
                return pair
        return None

    # -- verification --------------------------------------------------------------

    def verify_entry(self, entry: CatalogEntry) -> EntryResult:
        A, ro = entry.algebra, entry.ring_only
        checks: list[tuple[str, bool, str]] = []
        report = validate(A, ring_only=ro)
        checks.append(("validate", report.ok, "ok" if report.ok else str(report)))
        text = format_alg(A)
        back = parse_alg(text, source=entry.name)
        checks.append(("alg-roundtrip", back == A and format_alg(back) == text, "byte-stable"))
        D = double(A, ring_only=ro)
        dv = validate(D, ring_only=ro)
        checks.append(("double-valid", dv.ok, "ok" if dv.ok else str(dv)))
        checks.append(("halve-double", halve(D, name=A.name, ring_only=ro) == A, "halve(double) = id"))
        if entry.double is not None:
            target = self[entry.double].algebra
            same = find_isomorphism(D, target, ring_only=ro) is not None
            checks.append(("double-matches", same, f"double({entry.name}) ~ {entry.double}"))
        if entry.wu is not None:
            got = format_total_class(A, wu_classes(A))
            checks.append(("wu", got == entry.wu, f"v = {got}"))
        if entry.sw is not None:
            got = format_total_class(A, sw_classes(A))
            checks.append(("sw", got == entry.sw, f"w = {got}"))
        verdict = check_realizable(A, self, ring_only=ro)
        got = verdict.verdict if verdict.rule in (None, "catalog") else f"{verdict.verdict}:{verdict.rule}"
        checks.append(("verdict", got == entry.expected, verdict.summary()))
        return EntryResult(entry.name, checks)

    def verify_pair(self, pair: CatalogPair) -> EntryResult:
        p = self.double_pair(pair)
        checks: list[tuple[str, bool, str]] = []
        rep = check_double_pair(p, ring_only=pair.ring_only)
        checks.append(("double-pair", rep.ok, str(rep)))
        if not pair.ring_only:
            phi = find_isomorphism(double(p.fixed), p.total)
            checks.append(("total-is-double", phi is not None, f"{pair.total} ~ double({pair.fixed})"))
        if is_poincare_duality(p.total) and is_poincare_duality(p.fixed) and not pair.ring_only:
            ok, detail = sw_correspondence(p)
            checks.append(("sw-correspondence", ok, detail))
            checks.append(("wu-correspondence (reported)", True, wu_correspondence(p)[1]))
        return EntryResult(f"pair {pair.name}", checks)

    def verify(self, name: str = "all") -> list[EntryResult]:
        if name == "all":
            return [self.verify_entry(e) for e in self] + [self.verify_pair(p) for p in self.pairs.values()]
        out = []
        if name in self.entries:
            out.append(self.verify_entry(self.entries[name]))
            out += [self.verify_pair(p) for p in self.pairs.values() if p.name == name]
        elif name in self.pairs:
            out.append(self.verify_pair(self.pairs[name]))
        else:
            raise UsageError(f"unknown catalog entry {name!r}")
        return out

    def verdict(self, name: str) -> RealizabilityReport:
        entry = self[name]
        return check_realizable(entry.algebra, self, ring_only=entry.ring_only)


def _kappa_classes(p: DoublePair, classes_total, classes_fixed):
    n_fixed = len(classes_fixed)
    bad = []
    for i in range(len(classes_total)):
        image = p.apply_kappa(classes_total[i])
        if i % 2:
            if classes_total[i]:
                bad.append(f"odd class {i} of {p.total.name} is nonzero")
            continue
        want = classes_fixed[i // 2] if i // 2 < n_fixed else frozenset()
        if image != want:
            bad.append(f"kappa(class {i}) = {p.fixed.format_vec(image)} but fixed has {p.fixed.format_vec(want)}")
    return bad


def sw_correspondence(p: DoublePair) -> tuple[bool, str]:
    """``kappa(w_{2i}(total)) = w_i(fixed)`` for every ``i``."""
    bad = _kappa_classes(p, sw_classes(p.total), sw_classes(p.fixed))
    return (not bad, "; ".join(bad) or "kappa(w_2i) = w_i for all i")


def wu_correspondence(p: DoublePair) -> tuple[bool, str]:
    bad = _kappa_classes(p, wu_classes(p.total), wu_classes(p.fixed))
    return (not bad, "; ".join(bad) or "kappa(v_2i) = v_i for all i")


# -- contents ----------------------------------------------------------------------


def _doubled(B: UnstableAlgebra, name: str, relabel: dict[str, str], ring_only: bool = False):
    """``double(B)`` renamed, with the kappa undoing ``relabel``."""
    total = double(B, name=name, relabel=relabel, ring_only=ring_only)
    kappa = {label: label for label in B.labels}
    for old, new in relabel.items():
        kappa.pop(old, None)
        kappa[new] = old
    return total, kappa


def _kappa_by_degree(total: UnstableAlgebra, fixed: UnstableAlgebra) -> dict[str, str]:
    # for algebras with at most one class per degree
    kappa = {}
    for label, deg in total.basis:
        (target,) = fixed.in_degree(deg // 2)
        kappa[label] = target
    return kappa


def _wedge(name: str, degrees: list[int], gens: list[str]) -> UnstableAlgebra:
    return UnstableAlgebra(name, [(UNIT, 0)] + list(zip(gens, degrees)))


def _binomial_class(var: str, n: int) -> str:
    # (1 + var)^(n+1) truncated at var^n, mod 2
    from math import comb

    terms = ["1"]
    for i in range(1, n + 1):
        if comb(n + 1, i) % 2:
            terms.append(var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


def _wu_projective(var: str, n: int) -> str:
    # v = sum binom(n - i, i) var^i (total Wu class of a projective space), mod 2
    from math import comb

    terms = ["1"]
    for i in range(1, n // 2 + 1):
        if comb(n - i, i) % 2:
            terms.append(var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


def build_catalog() -> Catalog:
    cat = Catalog()
    E = cat.add

    pt = E(CatalogEntry("pt", UnstableAlgebra("pt", [(UNIT, 0)], fundamental=UNIT), "Realizable",
                        ["F_2 in degree 0; fixed locus of the trivial examples below"], wu="1", sw="1"))
    moore = E(CatalogEntry(
        "Moore-p", UnstableAlgebra("Moore-p", [(UNIT, 0)]), "Realizable",
        ["simply connected p-torsion space (p odd), e.g. M(Z/p, n), n >= 2, trivial action",
         "mod 2 cohomology is F_2 in degree zero, so the trivial frame works"]))
    tele = E(CatalogEntry(
        "telescope", UnstableAlgebra("telescope", [(UNIT, 0)]), "Realizable",
        ["acyclic telescope of wedges of circles built from the commutator map",
         "the involution swaps wedge halves; the fixed locus is the base point"]))
    for e in (moore, tele):
        cat.add_pair(CatalogPair(e.name, e.name, pt.name, {UNIT: UNIT}, True, list(e.notes[:1])))

    for n in range(1, 5):
        s = E(CatalogEntry(f"S{n}", sphere(f"S{n}", n, "s"), "Realizable",
                           [f"fixed locus of the representation sphere S^{n}rho"],
                           double=f"S{n}rho", wu="1", sw="1"))
        t = sphere(f"S{n}rho", 2 * n, "t")
        E(CatalogEntry(f"S{n}rho", t, "Realizable" if n in (1, 2) else "Undetermined",
                       [f"one-point compactification of C^{n} with complex conjugation"], wu="1", sw="1"))
        cat.add_pair(CatalogPair(f"S{n}rho", f"S{n}rho", s.name, {UNIT: UNIT, "t": "s"}, True,
                                 ["spherical conjugation space"]))

    fixed_w = E(CatalogEntry("S1vS2", _wedge("S1vS2", [1, 2], ["a", "b"]), "Realizable",
                             ["common fixed locus of both involutions on S2vS4"], double="S2vS4"))
    E(CatalogEntry("S2vS4", _wedge("S2vS4", [2, 4], ["x", "y"]), "Undetermined",
                   ["the wedge of S^2 and S^4 (either action)"]))
    kappa_w = {UNIT: UNIT, "x": "a", "y": "b"}
    cat.add_pair(CatalogPair("S2vS4/conj", "S2vS4", fixed_w.name, kappa_w, True,
                             ["S^2 and S^4 as compactified C and C^2 with complex conjugation"]))
    cat.add_pair(CatalogPair(
        "S2vS4/second", "S2vS4", fixed_w.name, kappa_w, False,
        ["trivial on S^2, reflection in three coordinates on S^4; fixed locus S1vS2 again",
         "a cohomological double but not a conjugation space: not pure",
         "passes every necessary check, so the checks are not sufficient"]))

    poincare = E(CatalogEntry(
        "Poincare", UnstableAlgebra("Poincare", [(UNIT, 0), ("g", 3)], fundamental="g"), "Realizable",
        ["Poincare homology sphere S: exterior algebra on one class of degree 3"],
        double="Sigma3Poincare", wu="1", sw="1"))
    E(CatalogEntry("Sigma3Poincare", sphere("Sigma3Poincare", 6, "G"), "Undetermined",
                   ["triple suspension of S, homotopy equivalent to S^6; the involution",
                    "negates the suspension coordinates and fixes S"]))
    cat.add_pair(CatalogPair("Sigma3Poincare", "Sigma3Poincare", poincare.name, {UNIT: UNIT, "G": "g"}, True,
                             ["exotic: fixed locus is not a sphere"]))

    # surfaces: every closed surface is the real locus of a conjugation 4-manifold
    t2 = UnstableAlgebra("T2", [(UNIT, 0), ("a", 1), ("b", 1), ("ab", 2)],
                         {("a", "b"): ["ab"]}, fundamental="ab")
    klein = UnstableAlgebra("K", [(UNIT, 0), ("a", 1), ("b", 1), ("t", 2)],
                            {("a", "b"): ["t"], ("b", "b"): ["t"]}, fundamental="t")
    for surf, w, v in ((t2, "1", "1"), (klein, "1 + a", "1 + a")):
        dname = f"D({surf.name})"
        E(CatalogEntry(surf.name, surf, "Realizable", ["closed surface"], double=dname, wu=v, sw=w))
        relabel = {label: label.upper() for label in surf.labels if label != UNIT}
        total, kappa = _doubled(surf, dname, relabel)
        # the double of the torus has the intersection form of S2 x S2, itself a known real locus
        E(CatalogEntry(dname, total, "Realizable" if surf is t2 else "Undetermined",
                       [f"conjugation 4-manifold with real locus {surf.name}"]))
        cat.add_pair(CatalogPair(dname, dname, surf.name, kappa, True, ["any surface is a real locus"]))

    # projective spaces: RP^n in CP^n in HP^n, and OP^2 with the involution fixing HP^2
    for n in range(1, MAX_PROJECTIVE + 1):
        E(CatalogEntry(f"RP{n}", projective_space(f"RP{n}", 1, n, "a"), "Realizable",
                       [f"real projective space of dimension {n}"], double=f"CP{n}",
                       wu=_wu_projective("a", n), sw=_binomial_class("a", n)))
    for n in range(1, MAX_PROJECTIVE + 1):
        E(CatalogEntry(f"CP{n}", projective_space(f"CP{n}", 2, n, "x"),
                       "Realizable", [f"complex projective space, real locus of HP{n}"],
                       double=f"HP{n}", wu=_wu_projective("x", n), sw=_binomial_class("x", n)))
    for n in range(1, MAX_PROJECTIVE + 1):
        expected = "Realizable" if n in (1, 2) else "Undetermined"
        notes = [f"quaternionic projective space of quaternionic dimension {n}"]
        if n == 2:
            notes.append("real locus of OP2 for the involution fixing a quaternion subalgebra")
        E(CatalogEntry(f"HP{n}", projective_space(f"HP{n}", 4, n, "u"), expected, notes,
                       wu=_wu_projective("u", n), sw=_binomial_class("u", n)))
    E(CatalogEntry("OP2", projective_space("OP2", 8, 2, "z"), "NonRealizable:HopfOne",
                   ["octonionic projective plane: three cells, not a real locus",
                    "a double would need a generator in degree 16"], wu="1 + z", sw="1 + z + z^2"))
    for n in range(1, MAX_PROJECTIVE + 1):
        cat.add_pair(CatalogPair(f"CP{n}", f"CP{n}", f"RP{n}",
                                 _kappa_by_degree(cat[f"CP{n}"].algebra, cat[f"RP{n}"].algebra), True,
                                 ["conjugation cells from homogeneous coordinates"]))
        cat.add_pair(CatalogPair(f"HP{n}", f"HP{n}", f"CP{n}",
                                 _kappa_by_degree(cat[f"HP{n}"].algebra, cat[f"CP{n}"].algebra), True,
                                 ["conjugation cells from homogeneous coordinates"]))
    cat.add_pair(CatalogPair("OP2", "OP2", "HP2", _kappa_by_degree(cat["OP2"].algebra, cat["HP2"].algebra), True,
                             ["tau fixes the quaternion subalgebra spanned by 1, e1, e2, e4"]))

    # Floyd's four-cell manifolds
    z = UnstableAlgebra("Z", [(UNIT, 0), ("f2", 2), ("f3", 3), ("f5", 5)],
                        {("f2", "f3"): ["f5"]}, {(1, "f2"): ["f3"], (2, "f3"): ["f5"]}, fundamental="f5")
    y = UnstableAlgebra("Y", [(UNIT, 0), ("e4", 4), ("e6", 6), ("e10", 10)],
                        {("e4", "e6"): ["e10"]}, {(2, "e4"): ["e6"], (4, "e6"): ["e10"]}, fundamental="e10")
    E(CatalogEntry("Z", z, "Undetermined",
                   ["5-dimensional Floyd manifold; believed not to be a real locus, the checks cannot tell",
                    "stably it is a real locus (suspension spectrum level)"],
                   double="Y", wu="1 + f2", sw="1 + f2 + f3"))
    E(CatalogEntry("Y", y, "NonRealizable:FloydRule",
                   ["10-dimensional Floyd manifold; its double matches Floyd's forbidden pattern"],
                   wu="1 + e4", sw="1 + e4 + e6"))
    cat.add_pair(CatalogPair("Y/Z", "Y", "Z", {UNIT: UNIT, "e4": "f2", "e6": "f3", "e10": "f5"}, None,
                             ["kappa respects products and squares; no conjugation structure is known"]))

    # Dold manifolds P(m, n) = S^m x_{C2} CP^n and their doubles DP(m, n), ring level only
    for m, n in ((1, 1), (1, 2), (2, 1), (3, 1)):
        pname, dname = f"P({m},{n})", f"DP({m},{n})"
        P = truncated_polynomial(pname, [("c", 1, m + 1), ("d", 2, n + 1)])
        E(CatalogEntry(pname, P, "Realizable", [f"Dold manifold S^{m} x_C2 CP^{n}; Steenrod action not modelled"],
                       ring_only=True, double=dname))
        total, kappa = _doubled(P, dname, {"c": "C", "d": "D"} | _upper_monomials(P), ring_only=True)
        E(CatalogEntry(dname, total, "Undetermined",
                       [f"S^{2 * m + 1} x_S1 HP^{n}, a conjugation manifold with real locus {pname}"], ring_only=True))
        cat.add_pair(CatalogPair(dname, dname, pname, kappa, True, ["ring level only"], ring_only=True))

    # D8 = <x, y | x^2, y^2, (xy)^4>: every relator a square
    d8 = build_presentation_complex(parse_presentation("gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y"),
                                    name="X_D8")
    E(CatalogEntry("X_D8^C2", d8.cohomology_fixed, "Realizable",
                   ["presentation complex of D8 = <x, y | x^2, y^2, (xy)^4>"], double="X_D8"))
    E(CatalogEntry("X_D8", d8.cohomology_total, "Undetermined",
                   ["4-dimensional conjugation complex with one rho-cell per generator, one 2rho-cell per relator"]))
    cat.add_pair(CatalogPair("X_D8", "X_D8", "X_D8^C2", d8.kappa, True, ["all relators are squares"]))

    # a 4-complex from an intersection form: S2xS2 as the real locus of S^2rho x S^2rho
    s2s2 = realize_four_complex(2, AttachingElement({}, {(1, 2): 1}), name="S2rhoxS2rho")
    E(CatalogEntry("S2xS2", s2s2.cohomology_fixed.renamed("S2xS2"), "Realizable",
                   ["cell attached along the Whitehead product of two 2-spheres"], double="S2rhoxS2rho",
                   wu="1", sw="1"))
    E(CatalogEntry("S2rhoxS2rho", s2s2.cohomology_total, "Undetermined",
                   ["8-cell attached along the equivariant Whitehead bracket W"]))
    cat.add_pair(CatalogPair("S2rhoxS2rho", "S2rhoxS2rho", "S2xS2", s2s2.kappa, True, ["spherical"]))
    return cat


def _upper_monomials(P: UnstableAlgebra) -> dict[str, str]:
    return {label: label.replace("c", "C").replace("d", "D") for label in P.labels if label != UNIT}


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return build_catalog()


def catalog_list(catalog: Optional[Catalog] = None) -> dict:
    cat = catalog or default_catalog()
    return {
        "entries": [e.summary() for e in cat],
        "pairs": [p.summary() for p in cat.pairs.values()],
    }


def catalog_verify(name: str = "all", catalog: Optional[Catalog] = None) -> list[EntryResult]:
    cat = catalog or default_catalog()
    try:
        return cat.verify(name)
    except UsageError:
        raise
    except ConjzooError as exc:  # pragma: no cover - would indicate a broken entry
        return [EntryResult(name, [("error", False, str(exc))])]


__all__ = [
    "Catalog",
    "CatalogEntry",
    "CatalogPair",
    "EntryResult",
    "build_catalog",
    "catalog_list",
    "catalog_verify",
    "default_catalog",
    "sw_correspondence",
    "wu_correspondence",
]
