"""Seeded randomized property checks, shared by the ``props`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cayley_dickson import (
    CDElement,
    fixed_subalgebra_basis,
    hopf_map,
    line_is_tau_fixed,
    line_normalize,
    line_tau,
)
from .steenrod import SteenrodElement, adem_normalize, degree, normalize_monomial

DEFAULT_SEED = 20240611


@dataclass
class PropertyResult:
    name: str
    samples: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"property": self.name, "samples": self.samples, "pass": self.ok, "failures": self.failures[:5]}

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f" ({len(self.failures)} failures, first: {self.failures[0]})"
        return f"{status} {self.name} [{self.samples} samples]{tail}"


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(rng: random.Random, level: int, nonzero: bool = False) -> CDElement:
    while True:
        x = CDElement.of(level, *(random_rational(rng) for _ in range(1 << level)))
        if not (nonzero and x.is_zero()):
            return x


def random_fixed_element(rng: random.Random, level: int) -> CDElement:
    out = CDElement.zero(level)
    for e in fixed_subalgebra_basis(level):
        out = out + e * random_rational(rng)
    return out


def cd_axioms(level: int, samples: int, rng: random.Random) -> list[PropertyResult]:
    one = CDElement.one(level)
    names = ["unit", "conj-anti-multiplicative", "tau-involution", "tau-multiplicative",
             "tau-commutes-with-conj", "norm-multiplicative"]
    results = {n: PropertyResult(f"{n} (level {level})", samples) for n in names}
    for _ in range(samples):
        a, b = random_element(rng, level), random_element(rng, level)
        ab = a * b
        checks = {
            "unit": one * a == a and a * one == a,
            "conj-anti-multiplicative": ab.conj() == b.conj() * a.conj(),
            "tau-involution": a.tau().tau() == a,
            "tau-multiplicative": ab.tau() == a.tau() * b.tau(),
            "tau-commutes-with-conj": a.conj().tau() == a.tau().conj(),
            "norm-multiplicative": ab.norm() == a.norm() * b.norm(),
        }
        for n, ok in checks.items():
            if not ok:
                results[n].failures.append(f"a = {a}, b = {b}")
    return list(results.values())


def line_criterion(level: int, samples: int, rng: random.Random) -> list[PropertyResult]:
    """tau fixes ``[x, y]`` exactly when ``x^-1 y`` is tau-fixed; half the samples are built fixed."""
    crit = PropertyResult(f"line-fixed-criterion (level {level})", samples)
    equi = PropertyResult(f"hopf-tau-equivariant (level {level})", samples)
    for i in range(samples):
        y = random_element(rng, level, nonzero=True)
        if i % 2:
            u = random_fixed_element(rng, level)
            while u.is_zero():
                u = random_fixed_element(rng, level)
            x = y * u
        else:
            x = random_element(rng, level, nonzero=True)
        p = line_normalize(x, y)
        q = x.inv() * y
        if line_is_tau_fixed(p) != (q.tau() == q):
            crit.failures.append(f"x = {x}, y = {y}")
        if hopf_map(x.tau(), y.tau()) != line_tau(hopf_map(x, y)):
            equi.failures.append(f"x = {x}, y = {y}")
    return [crit, equi]


def random_monomial(rng: random.Random, max_degree: int) -> tuple[int, ...]:
    parts = []
    budget = rng.randint(1, max_degree)
    while budget > 0:
        k = rng.randint(1, budget)
        parts.append(k)
        budget -= k
    return tuple(parts)


def adem_properties(max_degree: int, samples: int, rng: random.Random) -> list[PropertyResult]:
    idem = PropertyResult(f"adem-idempotent (degree <= {max_degree})", samples)
    homog = PropertyResult(f"adem-degree-preserving (degree <= {max_degree})", samples)
    admissible = PropertyResult(f"adem-admissible-output (degree <= {max_degree})", samples)
    for _ in range(samples):
        m = random_monomial(rng, max_degree)
        e = adem_normalize(SteenrodElement.of(m))
        if adem_normalize(e) != e:
            idem.failures.append(str(m))
        if any(degree(t) != degree(m) for t in e.terms):
            homog.failures.append(str(m))
        if not e.is_admissible():
            admissible.failures.append(str(m))
    return [idem, homog, admissible]


def confluence(max_degree: int, samples: int, rng: random.Random) -> list[PropertyResult]:
    res = PropertyResult(f"leftmost-rightmost-confluence (degree <= {max_degree})", samples)
    for _ in range(samples):
        m = random_monomial(rng, max_degree)
        if normalize_monomial(m, "leftmost") != normalize_monomial(m, "rightmost"):
            res.failures.append(str(m))
    return [res]


SUITES = ("cd", "lines", "adem")


def run_suite(suite: str, samples: int = 1000, seed: int = DEFAULT_SEED) -> list[PropertyResult]:
    rng = random.Random(seed)
    if suite == "cd":
        return [r for level in range(4) for r in cd_axioms(level, samples, rng)]
    if suite == "lines":
        return [r for level in (2, 3) for r in line_criterion(level, samples, rng)]
    if suite == "adem":
        return adem_properties(20, samples, rng) + confluence(16, samples, rng)
    raise ValueError(f"unknown suite {suite!r}")


__all__ = [
    "DEFAULT_SEED",
    "PropertyResult",
    "SUITES",
    "adem_properties",
    "cd_axioms",
    "confluence",
    "line_criterion",
    "random_element",
    "random_fixed_element",
    "random_monomial",
    "run_suite",
]
