"""Reader and canonical printer for the ``.alg`` text format.

::

    algebra RP2
    basis
    1 0
    a 1
    a^2 2
    mul
    a a = a^2
    sq
    Sq1 a = a^2        # redundant: Sq^deg is the square by default
    fundamental a^2
    end

Omitted products are zero (unit products excepted), omitted squares are
zero except ``Sq^{deg b} b = b^2``.  The printer emits only entries that
differ from these defaults, in basis order, so printing is byte-stable.

A second header, ``polynomial <name>``, describes a truncated polynomial
algebra by its generators (``gen <label> <degree> [<height>]``) and an
optional ``sq`` block on generators; it is expanded to a monomial basis.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import ParseError, UsageError
from .unstable import UNIT, UnstableAlgebra, truncated_polynomial

_SQ_HEAD = re.compile(r"Sq\^?(\d+)$")
_BAD_LABEL = re.compile(r"[=+#]")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield lineno, body


def _col(body: str, token: str) -> int:
    i = body.find(token)
    return i + 1 if i >= 0 else 1


def _parse_rhs(body: str, lineno: int, source: str) -> tuple[str, list[str]]:
    if "=" not in body:
        raise ParseError("expected '='", lineno, len(body) + 1, source)
    lhs, rhs = body.split("=", 1)
    col = len(lhs) + 2
    rhs_s = rhs.strip()
    if not rhs_s:
        raise ParseError("empty right-hand side (write 0 for zero)", lineno, col, source)
    if rhs_s == "0":
        return lhs, []
    terms = [t.strip() for t in rhs_s.split("+")]
    for t in terms:
        if not t or len(t.split()) != 1:
            raise ParseError(f"malformed term {t!r}", lineno, col + _col(rhs, t or "+") - 1, source)
    return lhs, terms


def parse_alg(text: str, source: str = "<alg>", max_degree: Optional[int] = None) -> UnstableAlgebra:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty file", 1, 1, source)
    lineno, body = lines[0]
    head = body.split()
    if head[0] == "polynomial":
        return _parse_polynomial(lines, source, max_degree)
    if head[0] != "algebra" or len(head) != 2:
        raise ParseError("first line must be 'algebra <name>'", lineno, 1, source)
    name = head[1]

    basis: list[tuple[str, int]] = []
    labels: dict[str, int] = {}
    mul: dict[tuple[str, str], list[str]] = {}
    sq: dict[tuple[int, str], list[str]] = {}
    fundamental = None
    block = None
    seen_basis = False
    ended = False

    def known(label: str, lineno: int, body: str):
        if label not in labels:
            raise ParseError(f"unknown label {label!r}", lineno, _col(body, label), source)

    for lineno, body in lines[1:]:
        if ended:
            raise ParseError("content after 'end'", lineno, 1, source)
        words = body.split()
        if words == ["end"]:
            ended = True
            continue
        if len(words) == 1 and words[0] in ("basis", "mul", "sq"):
            if words[0] != "basis" and not seen_basis:
                raise ParseError(f"'{words[0]}' block before 'basis'", lineno, 1, source)
            block = words[0]
            seen_basis = True
            continue
        if words[0] == "fundamental":
            if len(words) != 2:
                raise ParseError("expected 'fundamental <label>'", lineno, 1, source)
            known(words[1], lineno, body)
            fundamental = words[1]
            continue
        if block is None:
            raise ParseError(f"unexpected {words[0]!r} outside any block", lineno, 1, source)
        if block == "basis":
            if len(words) != 2:
                raise ParseError("expected '<label> <degree>'", lineno, 1, source)
            label, deg_s = words
            if _BAD_LABEL.search(label) or label == "0":
                raise ParseError(f"illegal label {label!r}", lineno, 1, source)
            if label in labels:
                raise ParseError(f"duplicate label {label!r}", lineno, 1, source)
            if not deg_s.isdigit():
                raise ParseError(f"degree must be a non-negative integer, got {deg_s!r}",
                                 lineno, _col(body, deg_s), source)
            labels[label] = int(deg_s)
            basis.append((label, int(deg_s)))
        elif block == "mul":
            lhs, terms = _parse_rhs(body, lineno, source)
            factors = lhs.split()
            if len(factors) != 2:
                raise ParseError("expected '<label> <label> = ...'", lineno, 1, source)
            for t in factors + terms:
                known(t, lineno, body)
            a, b = factors
            for key in ((a, b), (b, a)):
                if key in mul and sorted(mul[key]) != sorted(terms):
                    raise ParseError(f"conflicting entry for {a} {b}", lineno, 1, source)
            mul[(a, b)] = terms
        elif block == "sq":
            lhs, terms = _parse_rhs(body, lineno, source)
            parts = lhs.split()
            m = _SQ_HEAD.match(parts[0]) if parts else None
            if len(parts) != 2 or not m:
                raise ParseError("expected 'Sq<k> <label> = ...'", lineno, 1, source)
            k = int(m.group(1))
            for t in parts[1:] + terms:
                known(t, lineno, body)
            if k == 0:
                raise ParseError("Sq0 is the identity and cannot be set", lineno, 1, source)
            if (k, parts[1]) in sq:
                raise ParseError(f"duplicate entry for Sq{k} {parts[1]}", lineno, 1, source)
            sq[(k, parts[1])] = terms
    if not ended:
        raise ParseError("missing 'end'", lines[-1][0], 1, source)
    if labels.get(UNIT) != 0:
        raise ParseError("basis must contain '1 0'", lines[0][0], 1, source)
    try:
        return UnstableAlgebra(name, basis, mul, sq, fundamental)
    except UsageError as exc:
        raise ParseError(str(exc), lines[0][0], 1, source) from None


def _parse_monomial(token: str, names: list[str], lineno: int, source: str) -> tuple[int, ...]:
    exps = [0] * len(names)
    if token == UNIT:
        return tuple(exps)
    for factor in token.split("."):
        g, _, e = factor.partition("^")
        if g not in names:
            raise ParseError(f"unknown generator {g!r}", lineno, 1, source)
        if e and not e.isdigit():
            raise ParseError(f"bad exponent in {factor!r}", lineno, 1, source)
        exps[names.index(g)] += int(e) if e else 1
    return tuple(exps)


def _parse_polynomial(lines, source: str, max_degree: Optional[int]) -> UnstableAlgebra:
    lineno, body = lines[0]
    head = body.split()
    if len(head) != 2:
        raise ParseError("first line must be 'polynomial <name>'", lineno, 1, source)
    name = head[1]
    gens: list[tuple[str, int, Optional[int]]] = []
    raw_sq: list[tuple[int, int, str, list[str]]] = []
    block = "gens"
    ended = False
    for lineno, body in lines[1:]:
        if ended:
            raise ParseError("content after 'end'", lineno, 1, source)
        words = body.split()
        if words == ["end"]:
            ended = True
        elif words == ["sq"]:
            block = "sq"
        elif block == "gens":
            if words[0] != "gen" or len(words) not in (3, 4) or not all(w.isdigit() for w in words[2:]):
                raise ParseError("expected 'gen <label> <degree> [<height>]'", lineno, 1, source)
            gens.append((words[1], int(words[2]), int(words[3]) if len(words) == 4 else None))
        else:
            lhs, terms = _parse_rhs(body, lineno, source)
            parts = lhs.split()
            m = _SQ_HEAD.match(parts[0]) if parts else None
            if len(parts) != 2 or not m:
                raise ParseError("expected 'Sq<k> <generator> = ...'", lineno, 1, source)
            raw_sq.append((lineno, int(m.group(1)), parts[1], terms))
    if not ended:
        raise ParseError("missing 'end'", lines[-1][0], 1, source)
    if not gens:
        raise ParseError("no generators", lines[0][0], 1, source)
    names = [g for g, _, _ in gens]
    sq = {}
    for lineno, k, g, terms in raw_sq:
        if g not in names:
            raise ParseError(f"unknown generator {g!r}", lineno, 1, source)
        sq[(k, g)] = [_parse_monomial(t, names, lineno, source) for t in terms]
    if any(h is None for _, _, h in gens) and max_degree is None:
        raise ParseError("an untruncated generator needs a degree cap (--max-degree)", lines[0][0], 1, source)
    try:
        return truncated_polynomial(name, gens, sq, max_degree)
    except UsageError as exc:
        raise ParseError(str(exc), lines[0][0], 1, source) from None


def format_alg(A: UnstableAlgebra) -> str:
    out = [f"algebra {A.name}", "basis"]
    out += [f"{label} {deg}" for label, deg in A.basis]
    out.append("mul")
    for (a, b), v in A.mul_table.items():
        out.append(f"{a} {b} = {A.format_vec(v)}")
    out.append("sq")
    for (k, b), v in A.sq_table.items():
        out.append(f"Sq{k} {b} = {A.format_vec(v)}")
    if A.fundamental is not None:
        out.append(f"fundamental {A.fundamental}")
    out.append("end")
    return "\n".join(out) + "\n"


def load_alg(path: str, max_degree: Optional[int] = None) -> UnstableAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_alg(fh.read(), source=path, max_degree=max_degree)


__all__ = ["format_alg", "load_alg", "parse_alg"]
