"""Command-line front end: ``conjzoo <command> ...``.

Exit status is 0 when a result (or verdict) was produced, 1 when the input
was malformed or failed validation, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import cayley_dickson as cd
from . import jordan, steenrod
from .algfile import format_alg, load_alg
from .catalog import catalog_list, catalog_verify, default_catalog
from .constructions import parse_intersection_form, parse_presentation, build_presentation_complex, realize_four_complex
from .errors import (
    ConjzooError,
    DomainError,
    InvalidAlgebra,
    NotADoubleCandidate,
    NotAllRelatorsSquare,
    NotPoincareDuality,
    ParseError,
    UsageError,
)
from .obstructions import RULES, check_realizable
from .properties import DEFAULT_SEED, SUITES, run_suite
from .unstable import double, format_total_class, halve, sw_classes, validate, wu_classes

INPUT_ERRORS = (ParseError, InvalidAlgebra, NotADoubleCandidate, NotPoincareDuality, NotAllRelatorsSquare, DomainError)


class Output:
    """Collects what a command prints so ``--output`` and ``--json`` are handled in one place."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.text: list[str] = []
        self.data: Any = None

    def emit(self, text: str, data: Any) -> None:
        self.text.append(text)
        self.data = data

    def render(self) -> str:
        if self.as_json:
            return json.dumps(self.data, indent=2) + "\n"
        body = "\n".join(self.text)
        return body if body.endswith("\n") else body + "\n"


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_alg(args) -> Any:
    _read(args.file)
    return load_alg(args.file, max_degree=args.max_degree)


# -- cd ---------------------------------------------------------------------------


def _element_dict(x: cd.CDElement) -> dict:
    return {"level": x.level, "value": str(x), "coords": [str(c) for c in x.coords]}


def cmd_cd(args, out: Output) -> int:
    op = args.cd_command
    if op in ("mul", "add"):
        level = args.level
        a = cd.parse_element(args.a, level)
        b = cd.parse_element(args.b, level)
        if a.level != b.level:
            level = max(a.level, b.level)
            a, b = a.embed(level), b.embed(level)
        r = a * b if op == "mul" else a + b
        out.emit(str(r), _element_dict(r))
    elif op in ("tau", "conj", "inv"):
        a = cd.parse_element(args.a, args.level)
        r = {"tau": a.tau, "conj": a.conj, "inv": a.inv}[op]()
        out.emit(str(r), _element_dict(r))
    elif op == "norm":
        a = cd.parse_element(args.a, args.level)
        out.emit(str(a.norm()), {"level": a.level, "value": str(a), "norm": str(a.norm())})
    elif op == "table":
        level = _level(args.level_arg, 0)
        table = cd.multiplication_table(level)
        cells = [[str(x) for x in row] for row in table]
        width = max(len(c) for row in cells for c in row)
        heads = ["1"] + [f"e{i}" for i in range(1, 1 << level)]
        lines = [" " * 4 + " ".join(h.rjust(width) for h in heads)]
        for h, row in zip(heads, cells):
            lines.append(h.ljust(4) + " ".join(c.rjust(width) for c in row))
        out.emit("\n".join(lines), {"level": level, "table": cells})
    elif op == "fixed":
        level = _level(args.level_arg, 1)
        basis = cd.fixed_subalgebra_basis(level)
        closed = cd.is_closed_under_multiplication(basis)
        phi = cd.fixed_subalgebra_isomorphism(level)
        images = None
        if phi is not None:
            src = ["1"] + [f"e{i}" for i in range(1, 1 << (level - 1))]
            images = {s: str(basis[phi.perm[j]] * phi.signs[j]) for j, s in enumerate(src)}
        lines = [
            f"fixed subalgebra of tau at level {level}: span of {', '.join(str(e) for e in basis)}",
            f"dimension {len(basis)}, closed under multiplication: {'yes' if closed else 'no'}",
        ]
        if images:
            lines.append(f"isomorphic to level {level - 1} via " + ", ".join(f"{k} -> {v}" for k, v in images.items()))
        else:
            lines.append(f"no signed-permutation isomorphism to level {level - 1}")
        out.emit("\n".join(lines), {
            "level": level,
            "basis": [str(e) for e in basis],
            "dimension": len(basis),
            "closed": closed,
            "isomorphism": images,
        })
    return 0


def _level(text: str, low: int) -> int:
    try:
        level = int(text)
    except ValueError:
        raise UsageError(f"level must be an integer, got {text!r}") from None
    if not low <= level <= cd.MAX_LEVEL:
        raise UsageError(f"level must be in {low}..{cd.MAX_LEVEL}")
    return level


# -- jordan -----------------------------------------------------------------------


def cmd_jordan(args, out: Output) -> int:
    p = jordan.parse_matrix(_read(args.file), args.file)
    if args.jordan_command == "check":
        proj = jordan.is_projector(p)
        tp = p.tau()
        info = {
            "level": p.level,
            "trace": str(p.trace()),
            "projector": proj,
            "in_projective_plane": proj and p.trace() == 1,
            "tau_fixed": jordan.is_tau_fixed(p),
            "tau_image_projector": jordan.is_projector(tp),
            "tau_commutes_with_square": jordan.matrix_tau(jordan.jordan_mul(p, p)) == jordan.jordan_mul(tp, tp),
        }
        lines = [f"{k.replace('_', ' ')}: {_yes(v)}" for k, v in info.items()]
        out.emit("\n".join(lines), info)
        return 0
    s = jordan.classify_stratum(p)
    ts = jordan.classify_stratum(p.tau())
    info = {"stratum": s.tag.value, "dimension": s.dimension, "tau_stratum": ts.tag.value, "tau_stable": s == ts}
    out.emit(f"{s}; tau image in the same stratum: {_yes(s == ts)}", info)
    return 0


def _yes(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


# -- steenrod ---------------------------------------------------------------------


def cmd_adem(args, out: Output) -> int:
    e = steenrod.parse_expression(args.expr)
    r = steenrod.adem_normalize(e, args.strategy)
    out.emit(str(r), {
        "input": args.expr,
        "normal_form": str(r),
        "terms": [list(m) for m in r.sorted_terms()],
        "degrees": sorted(r.degrees() | e.degrees()),
    })
    return 0


def cmd_decomposable(args, out: Output) -> int:
    ok, cert = steenrod.is_decomposable(args.n)
    text = str(cert) if ok else f"Sq{args.n} is indecomposable"
    out.emit(text, {"n": args.n, "decomposable": ok, "certificate": str(cert) if cert else None})
    return 0


# -- unstable algebras ------------------------------------------------------------


def cmd_check(args, out: Output) -> int:
    A = _load_alg(args)
    report = validate(A, ring_only=args.ring_only)
    out.emit(str(report), report.to_dict())
    return 0 if report.ok else 1


def cmd_double(args, out: Output) -> int:
    A = _load_alg(args)
    fn = double if args.command == "double" else halve
    B = fn(A, name=args.name, ring_only=args.ring_only)
    out.emit(format_alg(B), B.to_dict())
    return 0


def _class_dict(A, classes) -> dict:
    return {
        "algebra": A.name,
        "classes": {str(k): A.format_vec(c) for k, c in enumerate(classes) if c},
        "total": format_total_class(A, classes),
    }


def cmd_wu(args, out: Output) -> int:
    A = _load_alg(args)
    classes = wu_classes(A) if args.command == "wu" else sw_classes(A)
    sym = "v" if args.command == "wu" else "w"
    data = _class_dict(A, classes)
    lines = [f"{sym}({A.name}) = {data['total']}"]
    lines += [f"  {sym}{k} = {v}" for k, v in data["classes"].items()]
    out.emit("\n".join(lines), data)
    return 0


# -- constructions ----------------------------------------------------------------


def _describe(desc) -> str:
    lines = ["cells:"]
    lines += [f"  {c.rep_multiple}rho  {c.name}  attached along {c.attaching}" for c in desc.cells]
    lines.append("fixed complex:")
    lines += [f"  dim {d}  {n}" + (f"  boundary {a}" if a else "") for d, n, a in desc.fixed_complex]
    if desc.betti_mod2 is not None:
        lines.append(f"Betti numbers mod 2: {tuple(desc.betti_mod2)}")
    lines.append("")
    lines.append(format_alg(desc.cohomology_total).rstrip())
    lines.append("")
    lines.append(format_alg(desc.cohomology_fixed).rstrip())
    lines.append("")
    lines.append(str(desc.check()))
    lines += [f"note: {n}" for n in desc.notes]
    return "\n".join(lines)


def cmd_present(args, out: Output) -> int:
    p = parse_presentation(_read(args.file), args.file)
    desc = build_presentation_complex(p, name=args.name)
    out.emit(_describe(desc), desc.to_dict())
    return 0


def cmd_realize4(args, out: Output) -> int:
    n, attach = parse_intersection_form(_read(args.file), args.file)
    desc = realize_four_complex(n, attach, name=args.name)
    out.emit(_describe(desc), desc.to_dict())
    return 0


# -- obstructions and catalog -----------------------------------------------------


def cmd_realizable(args, out: Output) -> int:
    A = _load_alg(args)
    report = check_realizable(A, None if args.no_catalog else default_catalog(), ring_only=args.ring_only)
    out.emit(str(report), report.to_dict())
    return 0


def cmd_rules(args, out: Output) -> int:
    lines = [f"{r.code} {r.name} [{r.basis}]: {r.statement}" + (f" ({r.source})" if r.source else "") for r in RULES]
    out.emit("\n".join(lines), [r.to_dict() for r in RULES])
    return 0


def cmd_catalog(args, out: Output) -> int:
    cat = default_catalog()
    if args.catalog_command == "list":
        data = catalog_list(cat)
        lines = []
        for e in data["entries"]:
            dims = " ".join(f"{d}:{n}" for d, n in e["dims"].items())
            lines.append(f"{e['name']:<16} {e['expected']:<24} dims {dims}")
            lines += [f"{'':16} - {n}" for n in e["notes"]]
        lines.append("")
        lines.append("pairs (total -> fixed):")
        for p in data["pairs"]:
            lines.append(f"{p['name']:<16} {p['total']} -> {p['fixed']} [{p['status']}]")
            lines += [f"{'':16} - {n}" for n in p["notes"]]
        out.emit("\n".join(lines), data)
        return 0
    if args.catalog_command == "show":
        entry = cat[args.name]
        out.emit(format_alg(entry.algebra), entry.algebra.to_dict())
        return 0
    results = catalog_verify(args.name, cat)
    ok = all(r.ok for r in results)
    summary = f"{sum(r.ok for r in results)}/{len(results)} passed"
    text = "\n".join(str(r) if args.verbose or not r.ok else f"PASS {r.name}" for r in results)
    out.emit(text + "\n" + summary, {"pass": ok, "results": [r.to_dict() for r in results]})
    return 0 if ok else 1


def cmd_props(args, out: Output) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = [r for s in suites for r in run_suite(s, args.samples, args.seed)]
    ok = all(r.ok for r in results)
    out.emit("\n".join(str(r) for r in results),
             {"seed": args.seed, "pass": ok, "results": [r.to_dict() for r in results]})
    return 0 if ok else 1


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("-o", "--output", help="write the result to this file")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    common.add_argument("--max-degree", type=int, default=None, help="degree cap for polynomial inputs")

    parser = argparse.ArgumentParser(prog="conjzoo", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, fn):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("cd", "Cayley-Dickson arithmetic", cmd_cd)
    cds = p.add_subparsers(dest="cd_command", required=True)
    for op in ("mul", "add"):
        q = cds.add_parser(op, parents=[common])
        q.add_argument("a")
        q.add_argument("b")
        q.add_argument("--level", type=int, default=None)
    for op in ("tau", "conj", "inv", "norm"):
        q = cds.add_parser(op, parents=[common])
        q.add_argument("a")
        q.add_argument("--level", type=int, default=None)
    for op in ("table", "fixed"):
        q = cds.add_parser(op, parents=[common])
        q.add_argument("level_arg", metavar="level")

    p = add("jordan", "Hermitian 3x3 matrices and projective planes", cmd_jordan)
    js = p.add_subparsers(dest="jordan_command", required=True)
    for op in ("check", "stratum"):
        js.add_parser(op, parents=[common]).add_argument("file")

    p = add("adem", "normalize a Steenrod expression to admissible form", cmd_adem)
    p.add_argument("expr")
    p.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")

    p = add("decomposable", "decide whether Sq^n is decomposable", cmd_decomposable)
    p.add_argument("n", type=_positive)

    for name, help_, fn in (
        ("check", "validate an .alg file", cmd_check),
        ("double", "double an algebra", cmd_double),
        ("halve", "halve a doubled algebra", cmd_double),
        ("wu", "Wu classes of a Poincare duality algebra", cmd_wu),
        ("sw", "Stiefel-Whitney classes via w = Sq(v)", cmd_wu),
        ("realizable", "run the real-locus obstruction rules", cmd_realizable),
    ):
        p = add(name, help_, fn)
        p.add_argument("file")
        p.add_argument("--ring-only", action="store_true", help="ignore the Steenrod action")
        if name in ("double", "halve"):
            p.add_argument("--name", default=None)
        if name == "realizable":
            p.add_argument("--no-catalog", action="store_true", help="skip the catalog cross-reference")

    p = add("present", "conjugation complex of a presentation with square relators", cmd_present)
    p.add_argument("file")
    p.add_argument("--name", default="X_G")
    p = add("realize4", "double a 4-complex given by an intersection form", cmd_realize4)
    p.add_argument("file")
    p.add_argument("--name", default="X")

    add("rules", "list the obstruction rules", cmd_rules)

    p = add("catalog", "the example catalog", cmd_catalog)
    cs = p.add_subparsers(dest="catalog_command", required=True)
    cs.add_parser("list", parents=[common])
    q = cs.add_parser("show", parents=[common])
    q.add_argument("name")
    q = cs.add_parser("verify", parents=[common])
    q.add_argument("name", nargs="?", default="all")
    q.add_argument("-v", "--verbose", action="store_true")

    p = add("props", "seeded randomized property checks", cmd_props)
    p.add_argument("suite", nargs="?", choices=SUITES + ("all",), default="all")
    p.add_argument("--samples", type=_positive, default=1000)
    return parser


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.json)
    try:
        status = args.func(args, out)
    except UsageError as exc:
        print(f"conjzoo: error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        report = getattr(exc, "report", None)
        if args.json and report is not None:
            sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
        elif report is not None:
            print(str(report), file=sys.stderr)
        print(f"conjzoo: {exc}", file=sys.stderr)
        return 1
    except ConjzooError as exc:  # pragma: no cover - every subclass is handled above
        print(f"conjzoo: {exc}", file=sys.stderr)
        return 1
    rendered = out.render()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
