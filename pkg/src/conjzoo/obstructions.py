"""Necessary conditions for a finite unstable algebra to be the cohomology of a real locus.

If ``B = H*(X^{C_2})`` for a conjugation space ``X`` then ``H*(X)`` is the
double ``Phi B``: ``kappa`` is a ring isomorphism and ``kappa Sq^{2k} = Sq^k kappa``.
So anything that cannot be the cohomology of a space obstructs ``B``.  The
engine runs three rules in a fixed order and stops at the first failure:

R1  ``Phi B`` must itself satisfy the unstable-algebra axioms.
R2  Hopf invariant one: ``Phi B = F_2[X]/(X^3)`` forces ``deg X`` in {1, 2, 4, 8}.
R3  Floyd's pattern: ``Phi B`` may not look like a four-cell 20-manifold with
    ``Sq^4 E8 = E12``, ``Sq^8 E12 = E20``, ``E8 E12 = E20``.

Passing all three proves nothing (``Undetermined``); only a catalog entry
with a known conjugation space can upgrade a verdict to ``Realizable``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Optional

from .errors import InvalidAlgebra
from .steenrod import is_decomposable, is_power_of_two
from .unstable import UNIT, UnstableAlgebra, double, find_isomorphism, projective_space, validate

if TYPE_CHECKING:
    from .catalog import Catalog

HOPF_ONE_DEGREES = (1, 2, 4, 8)


@dataclass(frozen=True)
class Rule:
    code: str
    name: str
    basis: str  # "computed" (checked by this package) or "cited" (an imported theorem)
    statement: str
    source: str = ""

    def to_dict(self) -> dict:
        return {"code": self.code, "name": self.name, "basis": self.basis,
                "statement": self.statement, "source": self.source}


RULES: tuple[Rule, ...] = (
    Rule(
        "R1",
        "DoubleValidity",
        "computed",
        "The doubled algebra must satisfy the ring, degree, unstable, Cartan and Adem axioms.",
    ),
    Rule(
        "R2",
        "HopfOne",
        "cited",
        "A space with mod 2 cohomology F_2[X]/(X^3) exists only if deg X is 1, 2, 4 or 8. "
        "When deg X is not a power of two this is recomputed here: Sq^d is decomposable, "
        "so it vanishes on X for degree reasons, contradicting Sq^d X = X^2.",
        "Adams, Hopf invariant one theorem (Ann. of Math. 72, 1960)",
    ),
    Rule(
        "R3",
        "FloydRule",
        "cited",
        "No closed 20-manifold has mod 2 cohomology with classes in degrees 0, 8, 12, 20 only, "
        "Sq^4 E8 = E12, Sq^8 E12 = E20 and E8 E12 = E20.",
        "Floyd, Lemma 3.4 on closed manifolds with four cells",
    ),
)

RULES_BY_NAME = {r.name: r for r in RULES}


def floyd_pattern() -> UnstableAlgebra:
    return UnstableAlgebra(
        "FloydPattern",
        [(UNIT, 0), ("E8", 8), ("E12", 12), ("E20", 20)],
        {("E8", "E12"): ["E20"]},
        {(4, "E8"): ["E12"], (8, "E12"): ["E20"]},
    )


@dataclass
class TrailStep:
    code: str
    rule: str
    status: str  # pass | fail | skipped
    detail: str

    def to_dict(self) -> dict:
        return {"code": self.code, "rule": self.rule, "status": self.status, "detail": self.detail}


@dataclass
class RealizabilityReport:
    algebra: str
    verdict: str  # Realizable | NonRealizable | Undetermined
    rule: Optional[str] = None
    evidence: dict[str, Any] = field(default_factory=dict)
    trail: list[TrailStep] = field(default_factory=list)

    @property
    def passed(self) -> list[str]:
        return [s.rule for s in self.trail if s.status == "pass"]

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "verdict": self.verdict,
            "rule": self.rule,
            "evidence": self.evidence,
            "trail": [s.to_dict() for s in self.trail],
        }

    def summary(self) -> str:
        if self.verdict == "NonRealizable":
            return f"NonRealizable({self.rule})"
        if self.verdict == "Realizable":
            return f"Realizable({self.evidence.get('witness')})"
        return "Undetermined"

    def __str__(self) -> str:
        lines = [f"{self.algebra}: {self.summary()}"]
        for s in self.trail:
            lines.append(f"  {s.code} {s.rule}: {s.status} - {s.detail}")
        for k, v in self.evidence.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _hopf_one(D: UnstableAlgebra) -> Optional[dict]:
    dims = D.dims()
    positive = sorted(d for d in dims if d > 0)
    if len(positive) != 2 or positive[1] != 2 * positive[0] or any(dims[d] != 1 for d in dims):
        return None
    d = positive[0]
    if find_isomorphism(D, projective_space("F2[X]/(X^3)", d, 2), ring_only=True) is None:
        return None
    X = D.in_degree(d)[0]
    info: dict[str, Any] = {"generator": X, "degree": d, "allowed": list(HOPF_ONE_DEGREES)}
    if d in HOPF_ONE_DEGREES:
        return info
    if is_power_of_two(d):
        info["basis"] = "cited"
    else:
        _, cert = is_decomposable(d)
        info["basis"] = "computed"
        info["certificate"] = str(cert)
        info["argument"] = (
            f"each Sq_b with 0 < b < {d} sends {X} into an empty degree, "
            f"so Sq{d} {X} = 0, yet Sq{d} {X} = {X}^2 != 0"
        )
    return info


def check_realizable(
    B: UnstableAlgebra, catalog: Optional["Catalog"] = None, ring_only: bool = False
) -> RealizabilityReport:
    """Run R1, R2, R3 on ``B`` (a candidate real-locus cohomology); first failure wins.

    With a ``catalog``, an ``Undetermined`` result is upgraded to ``Realizable``
    when ``B`` is isomorphic to the fixed algebra of a known conjugation space.
    """
    report = validate(B, ring_only=ring_only)
    if not report.ok:
        raise InvalidAlgebra(report)
    out = RealizabilityReport(B.name, "Undetermined")
    trail = out.trail

    D = double(B, check=False)
    r1 = validate(D, ring_only=ring_only)
    if not r1.ok:
        v = r1.violations[0]
        trail.append(TrailStep("R1", "DoubleValidity", "fail", f"{v.axiom}: {v.message}"))
        out.verdict, out.rule = "NonRealizable", "DoubleValidity"
        out.evidence = {"axiom": v.axiom, "message": v.message, "witness": v.witness}
        return out
    trail.append(TrailStep("R1", "DoubleValidity", "pass", f"double({B.name}) is a valid unstable algebra"))

    hopf = _hopf_one(D)
    if hopf is None:
        trail.append(TrailStep("R2", "HopfOne", "pass", "double is not a truncated polynomial F2[X]/(X^3)"))
    elif hopf["degree"] in HOPF_ONE_DEGREES:
        trail.append(TrailStep("R2", "HopfOne", "pass",
                               f"double is F2[X]/(X^3) with deg X = {hopf['degree']}, an allowed degree"))
    else:
        trail.append(TrailStep("R2", "HopfOne", "fail",
                               f"double is F2[X]/(X^3) with deg X = {hopf['degree']}, not in {{1, 2, 4, 8}}"))
        out.verdict, out.rule, out.evidence = "NonRealizable", "HopfOne", hopf
        return out

    if ring_only:
        trail.append(TrailStep("R3", "FloydRule", "skipped", "ring-only data carries no Steenrod action"))
    else:
        match = find_isomorphism(D, floyd_pattern())
        if match is None:
            trail.append(TrailStep("R3", "FloydRule", "pass", "double does not match the Floyd pattern"))
        else:
            pattern = "Sq4 E8 = E12, Sq8 E12 = E20, E8 E12 = E20"
            trail.append(TrailStep("R3", "FloydRule", "fail", f"double matches {pattern}"))
            out.verdict, out.rule = "NonRealizable", "FloydRule"
            # each degree is one-dimensional, so the match sends a basis label to a single label
            out.evidence = {
                "pattern": pattern,
                "match": {"+".join(sorted(match[a])): a for a in D.labels if a != UNIT},
            }
            return out

    out.evidence = {"passed": out.passed}
    if catalog is not None:
        hit = catalog.known_real_locus(B, ring_only=ring_only)
        if hit is not None:
            out.verdict, out.rule = "Realizable", "catalog"
            out.evidence = {"passed": out.passed, "witness": hit.total, "pair": hit.name}
    return out


__all__ = [
    "HOPF_ONE_DEGREES",
    "RULES",
    "RULES_BY_NAME",
    "RealizabilityReport",
    "Rule",
    "TrailStep",
    "check_realizable",
    "floyd_pattern",
]
