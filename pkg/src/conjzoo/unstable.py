"""Finite graded F_2-algebras with an action of the Steenrod squares.

An :class:`UnstableAlgebra` is given by tables on a finite basis.  Elements
are frozensets of basis labels (an F_2 combination).  Table entries that
agree with the built-in defaults are never stored:

* products with the unit ``1`` default to the other factor, all other
  products default to zero;
* ``Sq^k b`` defaults to ``b * b`` when ``k = deg b`` and to zero otherwise.

So two algebras with the same effective structure have identical tables,
and equality is structural (the name is ignored).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import gf2, steenrod
from .errors import DomainError, InvalidAlgebra, NotADoubleCandidate, NotPoincareDuality, UsageError

UNIT = "1"

Vec = frozenset  # frozenset[str]
ZERO: frozenset = frozenset()


def vec(*labels: str) -> frozenset:
    out: set = set()
    for label in labels:
        out ^= {label}
    return frozenset(out)


class UnstableAlgebra:
    def __init__(
        self,
        name: str,
        basis: Sequence[tuple[str, int]],
        mul: Optional[Mapping[tuple[str, str], Iterable[str]]] = None,
        sq: Optional[Mapping[tuple[int, str], Iterable[str]]] = None,
        fundamental: Optional[str] = None,
    ):
        self.name = name
        self._basis = tuple((str(label), int(deg)) for label, deg in basis)
        self._deg = {}
        for label, deg in self._basis:
            if label in self._deg:
                raise UsageError(f"duplicate basis label {label!r}")
            if deg < 0:
                raise UsageError(f"negative degree for {label!r}")
            self._deg[label] = deg
        if self._deg.get(UNIT) != 0:
            raise UsageError("the basis must contain the unit '1' in degree 0")
        self._index = {label: i for i, (label, _) in enumerate(self._basis)}
        if fundamental is not None and fundamental not in self._deg:
            raise UsageError(f"fundamental class {fundamental!r} is not a basis label")
        self.fundamental = fundamental

        self._mul: dict[tuple[str, str], frozenset] = {}
        for (a, b), value in (mul or {}).items():
            key = self._pair(a, b)
            v = self._vec(value)
            if key in self._mul and self._mul[key] != v:
                raise UsageError(f"conflicting products given for {a} * {b}")
            self._mul[key] = v
        for key in list(self._mul):
            if self._mul[key] == self._default_product(*key):
                del self._mul[key]

        self._sq: dict[tuple[int, str], frozenset] = {}
        for (k, b), value in (sq or {}).items():
            k = int(k)
            self._require(b)
            if k < 0:
                raise UsageError(f"negative square Sq{k}")
            v = self._vec(value)
            if k == 0:
                if v != vec(b):
                    raise UsageError(f"Sq0 is the identity; cannot set Sq0 {b}")
                continue
            self._sq[(k, b)] = v
        for key in list(self._sq):
            if self._sq[key] == self._default_sq(*key):
                del self._sq[key]

    # -- structure ------------------------------------------------------------

    def _require(self, label: str):
        if label not in self._deg:
            raise UsageError(f"unknown basis label {label!r} in algebra {self.name!r}")

    def _vec(self, labels: Iterable[str]) -> frozenset:
        if isinstance(labels, str):
            labels = [labels]
        out: set = set()
        for label in labels:
            self._require(label)
            out ^= {label}
        return frozenset(out)

    def _pair(self, a: str, b: str) -> tuple[str, str]:
        self._require(a)
        self._require(b)
        return (a, b) if self._index[a] <= self._index[b] else (b, a)

    def _default_product(self, a: str, b: str) -> frozenset:
        if a == UNIT:
            return vec(b)
        if b == UNIT:
            return vec(a)
        return ZERO

    def _default_sq(self, k: int, b: str) -> frozenset:
        if k == self._deg[b]:
            return self.mul_basis(b, b)
        return ZERO

    @property
    def basis(self) -> tuple[tuple[str, int], ...]:
        return self._basis

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self._basis]

    def degree(self, label: str) -> int:
        self._require(label)
        return self._deg[label]

    def index(self, label: str) -> int:
        return self._index[label]

    @property
    def top_degree(self) -> int:
        return max(self._deg.values())

    def in_degree(self, d: int) -> list[str]:
        return [label for label, deg in self._basis if deg == d]

    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, deg in self._basis:
            out[deg] = out.get(deg, 0) + 1
        return dict(sorted(out.items()))

    def sort_vec(self, v: Iterable[str]) -> list[str]:
        return sorted(v, key=self._index.__getitem__)

    def format_vec(self, v: Iterable[str]) -> str:
        items = self.sort_vec(v)
        return " + ".join(items) if items else "0"

    @property
    def mul_table(self) -> dict[tuple[str, str], frozenset]:
        """Stored (non-default) products, keyed in basis order."""
        return dict(sorted(self._mul.items(), key=lambda kv: (self._index[kv[0][0]], self._index[kv[0][1]])))

    @property
    def sq_table(self) -> dict[tuple[int, str], frozenset]:
        """Stored (non-default) squares, sorted by basis position then ``k``."""
        return dict(sorted(self._sq.items(), key=lambda kv: (self._index[kv[0][1]], kv[0][0])))

    # -- operations -----------------------------------------------------------

    def mul_basis(self, a: str, b: str) -> frozenset:
        key = self._pair(a, b)
        if key in self._mul:
            return self._mul[key]
        return self._default_product(*key)

    def product(self, u: Iterable[str], v: Iterable[str]) -> frozenset:
        out: set = set()
        for a in u:
            for b in v:
                out ^= self.mul_basis(a, b)
        return frozenset(out)

    def sq_basis(self, k: int, b: str) -> frozenset:
        self._require(b)
        if k == 0:
            return vec(b)
        if (k, b) in self._sq:
            return self._sq[(k, b)]
        return self._default_sq(k, b)

    def sq_op(self, k: int, u: Iterable[str]) -> frozenset:
        out: set = set()
        for b in u:
            out ^= self.sq_basis(k, b)
        return frozenset(out)

    def apply_monomial(self, m: steenrod.Monomial, u: Iterable[str]) -> frozenset:
        """``Sq^{i_1} ... Sq^{i_k} u``, rightmost square applied first."""
        v = frozenset(u)
        for k in reversed(m):
            v = self.sq_op(k, v)
        return v

    def apply(self, e: steenrod.SteenrodElement, u: Iterable[str]) -> frozenset:
        out: set = set()
        for m in e.terms:
            out ^= self.apply_monomial(m, u)
        return frozenset(out)

    def total_sq(self, u: Iterable[str]) -> frozenset:
        """``Sq = Sq^0 + Sq^1 + ...`` applied to ``u``."""
        out: set = set()
        for k in range(self.top_degree + 1):
            out ^= self.sq_op(k, u)
        return frozenset(out)

    def homogeneous_parts(self, v: Iterable[str]) -> dict[int, frozenset]:
        parts: dict[int, set] = {}
        for label in v:
            parts.setdefault(self._deg[label], set()).add(label)
        return {d: frozenset(p) for d, p in sorted(parts.items())}

    # -- derived algebras ------------------------------------------------------

    def relabel(self, mapping: Mapping[str, str], name: Optional[str] = None) -> "UnstableAlgebra":
        """Rename basis labels; ``mapping`` must be a bijection fixing ``1``."""
        full = {label: mapping.get(label, label) for label in self.labels}
        if len(set(full.values())) != len(full):
            raise UsageError("relabeling is not injective")
        if full[UNIT] != UNIT:
            raise UsageError("relabeling must fix the unit")

        def m(v):
            return [full[x] for x in v]

        return UnstableAlgebra(
            name or self.name,
            [(full[label], deg) for label, deg in self._basis],
            {(full[a], full[b]): m(v) for (a, b), v in self._mul.items()},
            {(k, full[b]): m(v) for (k, b), v in self._sq.items()},
            full[self.fundamental] if self.fundamental else None,
        )

    def renamed(self, name: str) -> "UnstableAlgebra":
        return self.relabel({}, name)

    # -- comparison -------------------------------------------------------------

    def _key(self):
        return (
            self._basis,
            tuple((k, tuple(self.sort_vec(v))) for k, v in self.mul_table.items()),
            tuple((k, tuple(self.sort_vec(v))) for k, v in self.sq_table.items()),
            self.fundamental,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnstableAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"UnstableAlgebra({self.name!r}, dims={self.dims()})"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "basis": [[label, deg] for label, deg in self._basis],
            "mul": [[a, b, self.sort_vec(v)] for (a, b), v in self.mul_table.items()],
            "sq": [[k, b, self.sort_vec(v)] for (k, b), v in self.sq_table.items()],
            "fundamental": self.fundamental,
        }


# -- validation -------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "message": self.message, "witness": self.witness}


@dataclass
class ValidationReport:
    name: str
    checks: list[str]
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "valid": self.ok,
            "checks": list(self.checks),
            "violations": [v.to_dict() for v in self.violations],
        }

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: valid ({', '.join(self.checks)})"
        lines = [f"{self.name}: INVALID"]
        lines += [f"  [{v.axiom}] {v.message}" for v in self.violations]
        return "\n".join(lines)


RING_CHECKS = ["degree", "unit", "commutative", "associative"]
STEENROD_CHECKS = ["sq-degree", "unstable", "cartan", "adem"]


def _check_ring(A: UnstableAlgebra, out: list[Violation]):
    labels = A.labels
    for a, b in itertools.combinations_with_replacement(labels, 2):
        target = A.degree(a) + A.degree(b)
        for t in A.mul_basis(a, b):
            if A.degree(t) != target:
                out.append(Violation(
                    "degree",
                    f"{a} * {b} contains {t} of degree {A.degree(t)}, expected {target}",
                    {"pair": [a, b], "term": t},
                ))
    for b in labels:
        if A.mul_basis(UNIT, b) != vec(b):
            out.append(Violation("unit", f"1 * {b} = {A.format_vec(A.mul_basis(UNIT, b))}", {"label": b}))
    for a, b in itertools.combinations(labels, 2):
        if A.product([a], [b]) != A.product([b], [a]):
            out.append(Violation("commutative", f"{a} * {b} != {b} * {a}", {"pair": [a, b]}))
    for a, b, c in itertools.product(labels, repeat=3):
        left = A.product(A.mul_basis(a, b), [c])
        right = A.product([a], A.mul_basis(b, c))
        if left != right:
            out.append(Violation(
                "associative",
                f"({a} {b}) {c} = {A.format_vec(left)} but {a} ({b} {c}) = {A.format_vec(right)}",
                {"triple": [a, b, c]},
            ))


def _check_steenrod(A: UnstableAlgebra, out: list[Violation]):
    labels = A.labels
    top = A.top_degree
    for (k, b), v in A.sq_table.items():
        for t in v:
            if A.degree(t) != A.degree(b) + k:
                out.append(Violation(
                    "sq-degree",
                    f"Sq{k} {b} contains {t} of degree {A.degree(t)}, expected {A.degree(b) + k}",
                    {"k": k, "label": b, "term": t},
                ))
        if k > A.degree(b) and v:
            out.append(Violation(
                "unstable",
                f"Sq{k} {b} = {A.format_vec(v)} is nonzero although {k} > deg {b} = {A.degree(b)}",
                {"k": k, "label": b},
            ))
        if k == A.degree(b) and v != A.mul_basis(b, b):
            out.append(Violation(
                "unstable",
                f"Sq{k} {b} = {A.format_vec(v)} differs from {b}^2 = {A.format_vec(A.mul_basis(b, b))}",
                {"k": k, "label": b},
            ))
    for x, y in itertools.combinations_with_replacement(labels, 2):
        xy = A.mul_basis(x, y)
        for n in range(1, top + 1):
            left = A.sq_op(n, xy)
            right: set = set()
            for i in range(n + 1):
                right ^= A.product(A.sq_basis(i, x), A.sq_basis(n - i, y))
            if left != frozenset(right):
                out.append(Violation(
                    "cartan",
                    f"Sq{n}({x} {y}) = {A.format_vec(left)} but the Cartan sum is {A.format_vec(right)}",
                    {"n": n, "pair": [x, y]},
                ))
    for a in range(1, top + 1):
        for b in range(1, top + 1 - a):
            if a >= 2 * b:
                continue
            rhs = steenrod.adem_normalize(steenrod.SteenrodElement.sq(a, b))
            for x in labels:
                left = A.apply_monomial((a, b), [x])
                right = A.apply(rhs, [x])
                if left != right:
                    out.append(Violation(
                        "adem",
                        f"Sq{a} Sq{b} {x} = {A.format_vec(left)} but ({rhs}) {x} = {A.format_vec(right)}",
                        {"pair": [a, b], "label": x, "relation": str(rhs)},
                    ))


def validate(A: UnstableAlgebra, ring_only: bool = False) -> ValidationReport:
    """Check every axiom exhaustively on the finite tables.

    With ``ring_only`` the Steenrod-action axioms are skipped (for algebras
    whose module structure is not known).
    """
    violations: list[Violation] = []
    _check_ring(A, violations)
    checks = list(RING_CHECKS)
    if not ring_only:
        _check_steenrod(A, violations)
        checks += STEENROD_CHECKS
    return ValidationReport(A.name, checks, violations)


def _require_valid(A: UnstableAlgebra, ring_only: bool):
    report = validate(A, ring_only)
    if not report.ok:
        raise InvalidAlgebra(report)


# -- doubling -------------------------------------------------------------------


def double(
    B: UnstableAlgebra,
    name: Optional[str] = None,
    relabel: Optional[Mapping[str, str]] = None,
    ring_only: bool = False,
    check: bool = True,
) -> UnstableAlgebra:
    """The doubled algebra: degrees times two, same products, ``Sq^{2k} := Sq^k``, odd squares zero."""
    if check:
        _require_valid(B, ring_only)
    sq = {(2 * k, b): v for (k, b), v in B.sq_table.items()}
    A = UnstableAlgebra(
        name or f"double({B.name})",
        [(label, 2 * deg) for label, deg in B.basis],
        B.mul_table,
        sq,
        B.fundamental,
    )
    return A.relabel(relabel) if relabel else A


def halve(
    A: UnstableAlgebra,
    name: Optional[str] = None,
    relabel: Optional[Mapping[str, str]] = None,
    ring_only: bool = False,
) -> UnstableAlgebra:
    """Inverse of :func:`double`; refuses algebras that are not doubles."""
    _require_valid(A, ring_only)
    odd = [label for label, deg in A.basis if deg % 2]
    if odd:
        raise NotADoubleCandidate(f"class {odd[0]} has odd degree {A.degree(odd[0])}")
    for label, deg in A.basis:
        for k in range(1, deg + 1, 2):
            if A.sq_basis(k, label):
                raise NotADoubleCandidate(
                    f"Sq{k} {label} = {A.format_vec(A.sq_basis(k, label))} is a nonzero odd square"
                )
    sq = {}
    for (k, b), v in A.sq_table.items():
        sq[(k // 2, b)] = v
    B = UnstableAlgebra(
        name or f"halve({A.name})",
        [(label, deg // 2) for label, deg in A.basis],
        A.mul_table,
        sq,
        A.fundamental,
    )
    return B.relabel(relabel) if relabel else B


@dataclass
class DoublePair:
    """Candidate total-space and fixed-point cohomology with a degree-halving ``kappa``."""

    total: UnstableAlgebra
    fixed: UnstableAlgebra
    kappa: dict[str, str]

    def apply_kappa(self, v: Iterable[str]) -> frozenset:
        out: set = set()
        for label in v:
            out ^= {self.kappa[label]}
        return frozenset(out)


@dataclass
class CompatibilityReport:
    total: str
    fixed: str
    checks: list[str]
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "fixed": self.fixed,
            "compatible": self.ok,
            "checks": list(self.checks),
            "violations": [v.to_dict() for v in self.violations],
        }

    def __str__(self) -> str:
        head = f"{self.total} -> {self.fixed}: "
        if self.ok:
            return head + f"compatible ({', '.join(self.checks)})"
        return "\n".join([head + "INCOMPATIBLE"] + [f"  [{v.axiom}] {v.message}" for v in self.violations])


def check_double_pair(p: DoublePair, ring_only: bool = False) -> CompatibilityReport:
    """Necessary conditions: ``kappa`` halves degrees, is a ring isomorphism and
    intertwines ``Sq^{2k}`` on the total algebra with ``Sq^k`` on the fixed one."""
    T, F, kappa = p.total, p.fixed, p.kappa
    out: list[Violation] = []
    checks = ["bijection", "even-degrees", "degree-halving", "unit", "ring"]
    if not ring_only:
        checks += ["odd-squares", "steenrod"]
    report = CompatibilityReport(T.name, F.name, checks, out)

    if set(kappa) != set(T.labels) or sorted(kappa.values()) != sorted(F.labels):
        out.append(Violation("bijection", "kappa is not a bijection between the bases",
                             {"domain": sorted(kappa), "image": sorted(kappa.values())}))
        return report
    for label, deg in T.basis:
        if deg % 2:
            out.append(Violation("even-degrees", f"{label} has odd degree {deg}", {"label": label}))
        elif F.degree(kappa[label]) * 2 != deg:
            out.append(Violation(
                "degree-halving",
                f"deg {label} = {deg} but deg kappa({label}) = {F.degree(kappa[label])}",
                {"label": label},
            ))
    if kappa[UNIT] != UNIT:
        out.append(Violation("unit", "kappa does not send 1 to 1", {"image": kappa[UNIT]}))
    for a, b in itertools.combinations_with_replacement(T.labels, 2):
        left = p.apply_kappa(T.mul_basis(a, b))
        right = F.mul_basis(kappa[a], kappa[b])
        if left != right:
            out.append(Violation(
                "ring",
                f"kappa({a} {b}) = {F.format_vec(left)} but kappa({a}) kappa({b}) = {F.format_vec(right)}",
                {"pair": [a, b]},
            ))
    if ring_only:
        return report
    for label, deg in T.basis:
        for k in range(1, deg + 1):
            image = T.sq_basis(k, label)
            if k % 2:
                if image:
                    out.append(Violation("odd-squares", f"Sq{k} {label} = {T.format_vec(image)}",
                                         {"k": k, "label": label}))
                continue
            left = p.apply_kappa(image)
            right = F.sq_basis(k // 2, kappa[label])
            if left != right:
                out.append(Violation(
                    "steenrod",
                    f"kappa(Sq{k} {label}) = {F.format_vec(left)} but Sq{k // 2} kappa({label}) = {F.format_vec(right)}",
                    {"k": k, "label": label},
                ))
    return report


def identity_kappa(A: UnstableAlgebra) -> dict[str, str]:
    return {label: label for label in A.labels}


# -- Poincare duality, Wu and Stiefel-Whitney classes -------------------------------


def _evaluate(A: UnstableAlgebra, v: Iterable[str]) -> int:
    return 1 if A.fundamental in v else 0


def _pairing_rows(A: UnstableAlgebra, k: int) -> tuple[list[str], list[str], list[int]]:
    n = A.degree(A.fundamental)
    left, right = A.in_degree(k), A.in_degree(n - k)
    rows = []
    for b in left:
        row = 0
        for j, c in enumerate(right):
            if _evaluate(A, A.mul_basis(b, c)):
                row |= 1 << j
        rows.append(row)
    return left, right, rows


def check_poincare_duality(A: UnstableAlgebra):
    """Raise unless every cup pairing ``H^k x H^{n-k} -> F_2`` is perfect."""
    if A.fundamental is None:
        raise DomainError(f"algebra {A.name!r} has no fundamental class")
    n = A.degree(A.fundamental)
    if A.top_degree != n:
        raise NotPoincareDuality(f"{A.name}: classes above the fundamental degree {n}")
    for k in range(n + 1):
        left, right, rows = _pairing_rows(A, k)
        if not gf2.is_invertible(rows, len(right)):
            raise NotPoincareDuality(
                f"{A.name}: the pairing H^{k} x H^{n - k} is degenerate "
                f"(dimensions {len(left)} and {len(right)})"
            )


def is_poincare_duality(A: UnstableAlgebra) -> bool:
    try:
        check_poincare_duality(A)
    except (DomainError, NotPoincareDuality):
        return False
    return True


def wu_classes(A: UnstableAlgebra) -> list[frozenset]:
    """``v[k]`` is the class with ``<v_k x, [M]> = <Sq^k x, [M]>`` for all ``x`` of degree ``n - k``."""
    check_poincare_duality(A)
    n = A.degree(A.fundamental)
    out = []
    for k in range(n + 1):
        left, right, rows = _pairing_rows(A, k)
        target = 0
        for j, c in enumerate(right):
            if _evaluate(A, A.sq_basis(k, c)):
                target |= 1 << j
        combo = gf2.solve_combination(target, rows)
        # the pairing is perfect, so a solution exists
        v = frozenset(left[i] for i in combo)
        if v and 2 * k > n:
            raise NotPoincareDuality(f"{A.name}: Wu class v{k} is nonzero above half the dimension")
        out.append(v)
    return out


def sw_classes(A: UnstableAlgebra) -> list[frozenset]:
    """Total Stiefel-Whitney class ``w = Sq(v)`` split by degree."""
    v = wu_classes(A)
    n = len(v) - 1
    w: list[set] = [set() for _ in range(n + 1)]
    for k, vk in enumerate(v):
        for i in range(n - k + 1):
            w[k + i] ^= A.sq_op(i, vk)
    return [frozenset(x) for x in w]


def format_total_class(A: UnstableAlgebra, classes: Sequence[frozenset]) -> str:
    labels: list[str] = []
    for c in classes:
        labels += A.sort_vec(c)
    return " + ".join(labels) if labels else "0"


# -- isomorphism search -------------------------------------------------------------


def _invertible_matrices(m: int) -> list[list[int]]:
    # rows as bitsets of length m
    out = []
    for rows in itertools.product(range(1 << m), repeat=m):
        if gf2.rank(rows) == m:
            out.append(list(rows))
    return out


def find_isomorphism(
    A: UnstableAlgebra, B: UnstableAlgebra, ring_only: bool = False, limit: int = 200_000
) -> Optional[dict[str, frozenset]]:
    """Brute-force a degree-preserving isomorphism ``A -> B`` of algebras (and of
    Steenrod modules unless ``ring_only``).  Returns the images of basis labels."""
    if A.dims() != B.dims():
        return None
    degrees = list(A.dims())
    choices = []
    total = 1
    for d in degrees:
        mats = _invertible_matrices(len(A.in_degree(d)))
        total *= len(mats)
        choices.append(mats)
    if total > limit:
        raise UsageError(f"isomorphism search space too large ({total} candidates)")
    for pick in itertools.product(*choices):
        phi: dict[str, frozenset] = {}
        for d, mat in zip(degrees, pick):
            src, dst = A.in_degree(d), B.in_degree(d)
            for i, a in enumerate(src):
                phi[a] = frozenset(dst[j] for j in gf2.bits(mat[i]))

        def image(v):
            out: set = set()
            for label in v:
                out ^= phi[label]
            return frozenset(out)

        ok = all(
            image(A.mul_basis(a, b)) == B.product(phi[a], phi[b])
            for a, b in itertools.combinations_with_replacement(A.labels, 2)
        )
        if ok and not ring_only:
            ok = all(
                image(A.sq_basis(k, a)) == B.sq_op(k, phi[a])
                for a in A.labels
                for k in range(1, A.top_degree + 1)
            )
        if ok and A.fundamental is not None and B.fundamental is not None:
            ok = phi[A.fundamental] == vec(B.fundamental)
        if ok:
            return phi
    return None


def is_isomorphic(A: UnstableAlgebra, B: UnstableAlgebra, ring_only: bool = False) -> bool:
    return find_isomorphism(A, B, ring_only) is not None


# -- builders -------------------------------------------------------------------------


def monomial_label(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for g, e in zip(names, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return ".".join(parts) if parts else UNIT


def truncated_polynomial(
    name: str,
    generators: Sequence[tuple[str, int, Optional[int]]],
    sq: Optional[Mapping[tuple[int, str], Iterable[Sequence[int]]]] = None,
    max_degree: Optional[int] = None,
    fundamental: Optional[str] = "top",
) -> UnstableAlgebra:
    """Expand ``F_2[g_1, ...]/(g_i^{h_i})`` to a monomial basis.

    ``generators`` lists ``(label, degree, height)``; ``height=None`` means
    no relation, in which case ``max_degree`` must cap the expansion.  ``sq``
    gives ``Sq^k g`` for generators as lists of exponent vectors; missing
    entries use the unstable defaults, and the action on monomials follows
    from the Cartan formula (total square is multiplicative).  With
    ``fundamental='top'`` the unique top monomial, if any, is declared
    fundamental.
    """
    names = [g for g, _, _ in generators]
    degs = [d for _, d, _ in generators]
    heights = [h for _, _, h in generators]
    if any(h is None for h in heights) and max_degree is None:
        raise UsageError("a generator without truncation needs --max-degree")
    if any(d <= 0 for d in degs):
        raise UsageError("generators must have positive degree")
    ranges = []
    for d, h in zip(degs, heights):
        hi = h if h is not None else max_degree // d + 1
        if max_degree is not None:
            hi = min(hi, max_degree // d + 1)
        ranges.append(range(hi))

    def mdeg(e):
        return sum(a * d for a, d in zip(e, degs))

    monos = [e for e in itertools.product(*ranges) if max_degree is None or mdeg(e) <= max_degree]
    monos.sort(key=lambda e: (mdeg(e), tuple(-a for a in e)))
    mono_set = set(monos)
    label = {e: monomial_label(names, e) for e in monos}

    def times(e, f):
        g = tuple(a + b for a, b in zip(e, f))
        return g if g in mono_set else None

    def poly_mul(p: frozenset, q: frozenset) -> frozenset:
        out: set = set()
        for e in p:
            for f in q:
                g = times(e, f)
                if g is not None:
                    out ^= {g}
        return frozenset(out)

    zero = (0,) * len(names)
    total_gen = []
    sq = sq or {}
    for i, g in enumerate(names):
        unit_i = tuple(1 if j == i else 0 for j in range(len(names)))
        parts: set = {unit_i}
        for k in range(1, degs[i] + 1):
            if (k, g) in sq:
                terms = {tuple(e) for e in sq[(k, g)]}
            elif k == degs[i]:
                sqr = times(unit_i, unit_i)
                terms = {sqr} if sqr is not None else set()
            else:
                terms = set()
            for t in terms:
                if t not in mono_set:
                    continue
                if mdeg(t) != degs[i] + k:
                    raise UsageError(f"Sq{k} {g} has a term of the wrong degree")
                parts ^= {t}
        total_gen.append(frozenset(parts))

    mul = {}
    for a, b in itertools.combinations_with_replacement(monos, 2):
        g = times(a, b)
        mul[(label[a], label[b])] = [label[g]] if g is not None else []
    sq_table = {}
    for e in monos:
        total = frozenset({zero})
        for i, a in enumerate(e):
            for _ in range(a):
                total = poly_mul(total, total_gen[i])
        for t in total:
            k = mdeg(t) - mdeg(e)
            if k > 0:
                key = (k, label[e])
                sq_table[key] = sq_table.get(key, frozenset()) ^ {label[t]}
    if fundamental == "top" and any(h is None for h in heights):
        fundamental = None
    if fundamental == "top":
        top = max(mdeg(e) for e in monos)
        tops = [e for e in monos if mdeg(e) == top]
        fundamental = label[tops[0]] if len(tops) == 1 and top > 0 else None
    return UnstableAlgebra(name, [(label[e], mdeg(e)) for e in monos], mul, sq_table, fundamental)


def projective_space(name: str, gen_degree: int, n: int, gen: str = "x") -> UnstableAlgebra:
    """``F_2[x]/(x^{n+1})`` with ``Sq(x) = x + x^2``: cohomology of RP^n, CP^n, HP^n (or OP^2)."""
    return truncated_polynomial(name, [(gen, gen_degree, n + 1)])


def sphere(name: str, n: int, gen: str = "s") -> UnstableAlgebra:
    return UnstableAlgebra(name, [(UNIT, 0), (gen, n)], fundamental=gen if n > 0 else None)


def point(name: str = "pt") -> UnstableAlgebra:
    return UnstableAlgebra(name, [(UNIT, 0)])


__all__ = [
    "CompatibilityReport",
    "DoublePair",
    "UNIT",
    "UnstableAlgebra",
    "ValidationReport",
    "Violation",
    "check_double_pair",
    "check_poincare_duality",
    "double",
    "find_isomorphism",
    "format_total_class",
    "halve",
    "identity_kappa",
    "is_isomorphic",
    "is_poincare_duality",
    "monomial_label",
    "point",
    "projective_space",
    "sphere",
    "sw_classes",
    "truncated_polynomial",
    "validate",
    "vec",
    "wu_classes",
]
