"""Acceptance criteria, one group of tests per criterion; the summary prints a PASS/FAIL line for each.

Every check is exact (rational or F_2 arithmetic); random samples use fixed seeds.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from conjzoo.algfile import format_alg, parse_alg
from conjzoo.catalog import default_catalog, sw_correspondence
from conjzoo.cayley_dickson import (
    CDElement,
    associator,
    fixed_subalgebra_basis,
    fixed_subalgebra_isomorphism,
    hopf_map,
    is_closed_under_multiplication,
    line_is_tau_fixed,
    line_normalize,
    line_tau,
    non_associative_triple,
)
from conjzoo.cli import main
from conjzoo.constructions import (
    AttachingElement,
    build_presentation_complex,
    parse_presentation,
    realize_four_complex,
)
from conjzoo.jordan import CellKind, HermitianMatrix, classify_stratum, in_projective_plane, jordan_mul, matrix_tau
from conjzoo.obstructions import check_realizable
from conjzoo.steenrod import (
    SteenrodElement,
    adem_normalize,
    admissible_basis,
    is_decomposable,
    normalize_monomial,
)
from conjzoo.unstable import (
    UNIT,
    DoublePair,
    check_double_pair,
    double,
    find_isomorphism,
    format_total_class,
    halve,
    projective_space,
    sphere,
    sw_classes,
    validate,
    wu_classes,
)

from oracles import admissible_count_oracle, betti_oracle

SAMPLES = 1000
CATALOG = default_catalog()
DATA = Path(__file__).parent / "data"


def rational(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 6))


def element(rng, level, nonzero=False):
    while True:
        x = CDElement.of(level, *(rational(rng) for _ in range(1 << level)))
        if not (nonzero and x.is_zero()):
            return x


def basis(level):
    return [CDElement.basis(level, i) for i in range(1 << level)]


# -- 1 ----------------------------------------------------------------------------

C1 = pytest.mark.acceptance(1, "Cayley-Dickson suite: unit, conj, tau, norm, octonion non-associativity")


def _cd_identities(a, b, scalar):
    one = CDElement.one(a.level)
    return {
        "unit": one * a == a == a * one,
        "conj-anti": (a * b).conj() == b.conj() * a.conj(),
        "tau-involution": a.tau().tau() == a,
        "tau-multiplicative": (a * b).tau() == a.tau() * b.tau(),
        "tau-real-linear": (a * scalar + b).tau() == a.tau() * scalar + b.tau(),
        "tau-conj-commute": a.conj().tau() == a.tau().conj(),
        "norm-multiplicative": (a * b).norm() == a.norm() * b.norm(),
    }


@C1
@pytest.mark.parametrize("level", range(4))
def test_c1_basis_pairs(level):
    for a, b in itertools.product(basis(level), repeat=2):
        bad = [k for k, ok in _cd_identities(a, b, Fraction(3, 2)).items() if not ok]
        assert not bad, (a, b, bad)


@C1
@pytest.mark.parametrize("level", range(3))
def test_c1_basis_triples_associative_below_octonions(level):
    for a, b, c in itertools.product(basis(level), repeat=3):
        assert associator(a, b, c).is_zero()


@C1
def test_c1_octonion_witness():
    witness = non_associative_triple(3)
    assert witness is not None
    i, j, k = witness
    e = basis(3)
    assert (e[i] * e[j]) * e[k] != e[i] * (e[j] * e[k])


@C1
@pytest.mark.parametrize("level", range(4))
def test_c1_random(level):
    rng = random.Random(1000 + level)
    for _ in range(SAMPLES):
        a, b = element(rng, level), element(rng, level)
        bad = [k for k, ok in _cd_identities(a, b, rational(rng)).items() if not ok]
        assert not bad, (a, b, bad)


# -- 2 ----------------------------------------------------------------------------

C2 = pytest.mark.acceptance(2, "Fixed-subalgebra tower: closed, dimension 2^(k-1), isomorphic to level k-1")


@C2
@pytest.mark.parametrize("k", [1, 2, 3])
def test_c2_tower(k):
    fixed = fixed_subalgebra_basis(k)
    assert len(fixed) == 2 ** (k - 1)
    assert is_closed_under_multiplication(fixed)
    phi = fixed_subalgebra_isomorphism(k)
    assert phi is not None
    src = basis(k - 1)
    for x, y in itertools.product(src, repeat=2):
        assert phi.apply(x * y, fixed) == phi.apply(x, fixed) * phi.apply(y, fixed)


# -- 3 ----------------------------------------------------------------------------

C3 = pytest.mark.acceptance(3, "Projective-line fixed criterion and tau-equivariant Hopf map")


@C3
@pytest.mark.parametrize("level", [2, 3])
def test_c3_fixed_criterion(level):
    rng = random.Random(3000 + level)
    fixed = fixed_subalgebra_basis(level)
    hits = 0
    for n in range(SAMPLES):
        y = element(rng, level, nonzero=True)
        if n % 2:
            u = CDElement.zero(level)
            while u.is_zero():
                u = sum((e * rational(rng) for e in fixed), CDElement.zero(level))
            x = y * u
        else:
            x = element(rng, level, nonzero=True)
        q = x.inv() * y
        fixed_line = line_is_tau_fixed(line_normalize(x, y))
        hits += fixed_line
        assert fixed_line == (q.tau() == q), (x, y)
    assert hits >= SAMPLES // 2


@C3
@pytest.mark.parametrize("level", [2, 3])
def test_c3_hopf_equivariant(level):
    rng = random.Random(3100 + level)
    for _ in range(SAMPLES):
        x, y = element(rng, level), element(rng, level)
        if x.is_zero() and y.is_zero():
            continue
        assert hopf_map(x.tau(), y.tau()) == line_tau(hopf_map(x, y))


# -- 4 ----------------------------------------------------------------------------

C4 = pytest.mark.acceptance(4, "Jordan suite: tau commutes with the Jordan product, strata are tau-stable")


def _hermitian(rng, level):
    return HermitianMatrix.from_entries(
        level, rational(rng), rational(rng), rational(rng),
        element(rng, level), element(rng, level), element(rng, level),
    )


def _projector(rng, level, pattern):
    """Rank-one projector ``v v* / |v|^2`` with entries in an associative subalgebra.

    ``pattern`` says which of the three entries of ``v`` are nonzero.
    """
    u, w = element(rng, level), element(rng, level)
    span = [CDElement.one(level), u, w, u * w]

    def entry():
        x = CDElement.zero(level)
        while x.is_zero():
            x = sum((s * rational(rng) for s in span), CDElement.zero(level))
        return x

    v = [entry() if on else CDElement.zero(level) for on in pattern]
    m = [[v[i] * v[j].conj() for j in range(3)] for i in range(3)]
    n = sum((x.norm() for x in v), Fraction(0))
    return HermitianMatrix.from_full(level, m).scale(1 / n)


def _expected_stratum(pattern):
    if pattern[2]:
        return CellKind.OpenTopCell
    if pattern[1]:
        return CellKind.SphereCell
    return CellKind.ZeroCell


@C4
@pytest.mark.parametrize("level", range(4))
def test_c4_tau_commutes_with_product(level):
    rng = random.Random(4000 + level)
    for _ in range(100):
        a, b = _hermitian(rng, level), _hermitian(rng, level)
        assert matrix_tau(jordan_mul(a, b)) == jordan_mul(matrix_tau(a), matrix_tau(b))


@C4
@pytest.mark.parametrize("level", range(4))
def test_c4_strata(level):
    rng = random.Random(4100 + level)
    patterns = [p for p in itertools.product((0, 1), repeat=3) if any(p)]
    for _ in range(10):
        for pattern in patterns:
            p = _projector(rng, level, pattern)
            assert in_projective_plane(p)
            stratum = classify_stratum(p)
            assert stratum.tag is _expected_stratum(pattern)
            tp = matrix_tau(p)
            assert in_projective_plane(tp)
            assert classify_stratum(tp) == stratum


@C4
def test_c4_witnesses():
    for level in range(4):
        for diag in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            p = HermitianMatrix.diagonal(level, *diag)
            assert classify_stratum(matrix_tau(p)) == classify_stratum(p)
    text = (DATA / "sphere_point.txt").read_text()
    from conjzoo.jordan import parse_matrix

    p = parse_matrix(text)
    assert classify_stratum(p).tag is CellKind.SphereCell
    assert classify_stratum(matrix_tau(p)).tag is CellKind.SphereCell


# -- 5 ----------------------------------------------------------------------------

C5 = pytest.mark.acceptance(5, "Steenrod suite: normal forms, confluence, basis counts, decomposability")


def _random_monomial(rng, max_degree):
    parts, budget = [], rng.randint(1, max_degree)
    while budget:
        k = rng.randint(1, budget)
        parts.append(k)
        budget -= k
    return tuple(parts)


@C5
def test_c5_idempotent_and_degree_preserving():
    rng = random.Random(5000)
    for _ in range(400):
        m = _random_monomial(rng, 20)
        e = adem_normalize(SteenrodElement.of(m))
        assert adem_normalize(e) == e
        assert all(sum(t) == sum(m) for t in e.terms)
        assert e.is_admissible()


@C5
def test_c5_confluence():
    for n in range(1, 11):
        for cut in itertools.product((0, 1), repeat=n - 1):
            m, run = [], 1
            for c in cut:
                if c:
                    m.append(run)
                    run = 1
                else:
                    run += 1
            m.append(run)
            assert normalize_monomial(tuple(m), "leftmost") == normalize_monomial(tuple(m), "rightmost")
    rng = random.Random(5100)
    for _ in range(300):
        m = _random_monomial(rng, 16)
        assert normalize_monomial(m, "leftmost") == normalize_monomial(m, "rightmost")


@C5
def test_c5_basis_counts():
    assert [len(admissible_basis(n)) for n in range(13)] == [admissible_count_oracle(n) for n in range(13)]


@C5
def test_c5_decomposable():
    for n in range(1, 33):
        assert is_decomposable(n)[0] == (n & (n - 1) != 0), n


# -- 6 ----------------------------------------------------------------------------

C6 = pytest.mark.acceptance(6, "Doubling suite: halve(double) = id, doubles valid, RP2 -> CP2, Z -> Y")


@C6
@pytest.mark.parametrize("name", list(CATALOG.entries))
def test_c6_catalog(name):
    entry = CATALOG[name]
    D = double(entry.algebra, ring_only=entry.ring_only)
    assert validate(D, ring_only=entry.ring_only).ok
    assert halve(D, name=entry.algebra.name, ring_only=entry.ring_only) == entry.algebra


@C6
def test_c6_rp2():
    assert double(CATALOG["RP2"].algebra, name="CP2", relabel={"a": "x", "a^2": "x^2"}) == CATALOG["CP2"].algebra


@C6
def test_c6_floyd():
    Y = double(CATALOG["Z"].algebra, name="Y", relabel={"f2": "e4", "f3": "e6", "f5": "e10"})
    assert Y == CATALOG["Y"].algebra
    Z = CATALOG["Z"].algebra
    assert Z.sq_basis(1, "f2") == {"f3"} and Z.sq_basis(2, "f3") == {"f5"}
    assert Y.sq_basis(2, "e4") == {"e6"} and Y.sq_basis(4, "e6") == {"e10"}


# -- 7 ----------------------------------------------------------------------------

C7 = pytest.mark.acceptance(7, "Obstruction verdicts: OP2 HopfOne, Y FloydRule, Z undetermined, non-sufficiency")


@C7
def test_c7_op2():
    r = check_realizable(CATALOG["OP2"].algebra, CATALOG)
    assert (r.verdict, r.rule, r.evidence["degree"]) == ("NonRealizable", "HopfOne", 16)


@C7
def test_c7_floyd():
    assert check_realizable(CATALOG["Y"].algebra, CATALOG).rule == "FloydRule"
    z = check_realizable(CATALOG["Z"].algebra, CATALOG)
    assert z.verdict == "Undetermined" and z.rule is None


@C7
@pytest.mark.parametrize("name", ["CP2", "HP2", "T2", "K", "RP2", "S2", "D(T2)", "D(K)"])
def test_c7_necessary_checks_pass(name):
    entry = CATALOG[name]
    r = check_realizable(entry.algebra, CATALOG)
    assert r.verdict != "NonRealizable"
    assert all(step.status == "pass" for step in r.trail)
    assert len(r.trail) == 3


@C7
def test_c7_second_action():
    pair = CATALOG.pairs["S2vS4/second"]
    assert check_double_pair(CATALOG.double_pair(pair)).ok
    assert pair.conjugation_space is False
    assert any("not a conjugation space" in note for note in pair.notes)


# -- 8 ----------------------------------------------------------------------------

C8 = pytest.mark.acceptance(8, "Wu/SW suite: CP2, RP2, spheres, and kappa(w_2i) = w_i on catalog pairs")


@C8
@pytest.mark.parametrize(
    "alg, v, w",
    [
        (projective_space("CP2", 2, 2, "x"), "1 + x", "1 + x + x^2"),
        (projective_space("RP2", 1, 2, "a"), "1 + a", "1 + a + a^2"),
    ]
    + [(sphere(f"S{n}", n), "1", "1") for n in range(1, 9)],
)
def test_c8_classes(alg, v, w):
    assert format_total_class(alg, wu_classes(alg)) == v
    assert format_total_class(alg, sw_classes(alg)) == w


@C8
def test_c8_correspondence():
    checked = 0
    for pair in CATALOG.pairs.values():
        p = CATALOG.double_pair(pair)
        if pair.ring_only or p.total.fundamental is None or p.fixed.fundamental is None:
            continue
        ok, detail = sw_correspondence(p)
        assert ok, (pair.name, detail)
        checked += 1
    assert checked >= 15


# -- 9 ----------------------------------------------------------------------------

C9 = pytest.mark.acceptance(9, "Constructions suite: RP2 and D8 presentations, random 4-complexes, eta1 -> CP2/HP2")


@C9
def test_c9_rp2():
    d = build_presentation_complex(parse_presentation("gens: x\nrel: x x"))
    assert d.betti_mod2 == (1, 1, 1)


@C9
def test_c9_d8():
    d = build_presentation_complex(parse_presentation("gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y"))
    assert d.betti_mod2 == (1, 2, 3) == betti_oracle(d.boundary_mod2, 2)


@C9
def test_c9_random_forms():
    rng = random.Random(9000)
    for _ in range(100):
        n = rng.randint(1, 4)
        eta = {i: rng.randint(-2, 2) for i in range(1, n + 1)}
        omega = {(i, j): rng.randint(-2, 2) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        d = realize_four_complex(n, AttachingElement(eta, omega))
        assert check_double_pair(DoublePair(d.cohomology_total, d.cohomology_fixed, d.kappa)).ok
        assert d.half_dimension_ok()


@C9
def test_c9_eta1():
    d = realize_four_complex(1, AttachingElement({1: 1}))
    assert find_isomorphism(d.cohomology_fixed, CATALOG["CP2"].algebra) is not None
    assert find_isomorphism(d.cohomology_total, CATALOG["HP2"].algebra) is not None


# -- 10 ---------------------------------------------------------------------------

C10 = pytest.mark.acceptance(10, "End-to-end: catalog verify all, byte-stable .alg, golden JSON")


@C10
def test_c10_catalog_verify(capsys):
    assert main(["catalog", "verify", "all"]) == 0
    capsys.readouterr()


@C10
def test_c10_alg_round_trips():
    texts = [format_alg(e.algebra) for e in CATALOG]
    texts += [format_alg(double(e.algebra, ring_only=e.ring_only)) for e in CATALOG]
    texts += [p.read_text() for p in sorted(DATA.glob("*.alg")) if not p.name.startswith(("broken", "typo", "dold"))]
    for text in texts:
        assert format_alg(parse_alg(text)) == text


@C10
def test_c10_golden(capsys):
    from test_cli import GOLDEN, GOLDEN_CASES

    for name, argv in GOLDEN_CASES:
        main([str(a) for a in argv])
        out = capsys.readouterr().out
        assert out == (GOLDEN / name).read_text(), name
