from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conjzoo.constructions import (
    AttachingElement,
    GroupPresentation,
    build_presentation_complex,
    cup_form,
    free_reduce,
    parse_intersection_form,
    parse_presentation,
    realize_four_complex,
    square_root,
)
from conjzoo.errors import NotAllRelatorsSquare, ParseError, UsageError
from conjzoo.unstable import find_isomorphism, projective_space, sphere, validate

from oracles import betti_oracle


def P(text):
    return build_presentation_complex(parse_presentation(text))


def test_free_reduce():
    assert free_reduce([("x", 1), ("y", 1), ("y", -1), ("x", -1), ("x", 1)]) == (("x", 1),)


def test_square_root():
    w = (("x", 1), ("y", -1))
    assert square_root(w + w) == w
    assert square_root(w) is None
    assert square_root((("x", 1),)) is None


def test_rp2():
    d = P("gens: x\nrel: x x")
    assert d.betti_mod2 == (1, 1, 1)
    assert find_isomorphism(d.cohomology_fixed, projective_space("RP2", 1, 2)) is not None
    assert find_isomorphism(d.cohomology_total, projective_space("CP2", 2, 2)) is not None
    assert d.check().ok and d.half_dimension_ok()


def test_dihedral():
    d = P("gens: x y\nrel: x x\nrel: y y\nrel: x y x y x y x y")
    assert d.betti_mod2 == (1, 2, 3)
    assert d.betti_mod2 == betti_oracle(d.boundary_mod2, 2)
    assert d.check().ok
    assert [c.rep_multiple for c in d.cells] == [1, 1, 2, 2, 2]


def test_commutator_rejected():
    with pytest.raises(NotAllRelatorsSquare) as err:
        P("gens: x y\nrel: x y x' y'")
    assert err.value.relator == "x y x' y'"


def test_square_of_inverse_letters():
    d = P("gens: x y\nrel: x' y x' y")
    assert d.betti_mod2 == betti_oracle(d.boundary_mod2, 2)


words = st.lists(st.tuples(st.sampled_from("xyz"), st.sampled_from((1, -1))), min_size=1, max_size=4)


@given(st.lists(words, max_size=4))
def test_betti_matches_oracle(roots):
    rels = [tuple(w) + tuple(w) for w in roots]
    rels = [r for r in rels if square_root(free_reduce(r)) is not None]
    d = build_presentation_complex(GroupPresentation(("x", "y", "z"), tuple(rels)))
    assert d.betti_mod2 == betti_oracle(d.boundary_mod2, 3)
    assert d.check().ok
    assert validate(d.cohomology_total).ok


@pytest.mark.parametrize(
    "text, line",
    [("rel: x x\n", 1), ("gens: x\nrel: y\n", 2), ("gens: x\ngens: y\n", 2), ("gens: x\nbogus\n", 2), ("", 1)],
)
def test_presentation_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert err.value.line == line


def test_cp2_hp2():
    d = realize_four_complex(1, AttachingElement({1: 1}))
    assert find_isomorphism(d.cohomology_fixed, projective_space("CP2", 2, 2)) is not None
    assert find_isomorphism(d.cohomology_total, projective_space("HP2", 4, 2)) is not None
    assert d.cells[-1].attaching == "nu1"
    assert d.fixed_complex[-1][2] == "eta1"


def test_whitehead_product():
    d = realize_four_complex(2, AttachingElement({}, {(2, 1): 1}))
    assert d.cohomology_fixed.mul_basis("x1", "x2") == {"t"}
    assert d.cohomology_fixed.mul_basis("x1", "x1") == frozenset()
    assert d.cells[-1].attaching == "W12"
    assert d.cohomology_fixed.fundamental == "t"


def test_even_hopf_invariant():
    d = realize_four_complex(1, AttachingElement({1: 2}))
    assert d.cohomology_fixed.mul_basis("x1", "x1") == frozenset()
    assert d.cells[-1].attaching == "2*nu1"
    assert d.cohomology_fixed.fundamental is None


def test_out_of_range():
    with pytest.raises(UsageError):
        realize_four_complex(1, AttachingElement({2: 1}))
    with pytest.raises(UsageError):
        AttachingElement({}, {(1, 1): 1})


@pytest.mark.parametrize("seed", range(20))
def test_symmetric_form_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    diag = [rng.randint(-3, 3) for _ in range(n)]
    off = [[i, j, rng.randint(-3, 3)] for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    attach = AttachingElement.from_form(diag, off)
    d = realize_four_complex(n, attach)
    form = cup_form(attach, n)
    for i in range(n):
        for j in range(n):
            got = d.cohomology_fixed.mul_basis(f"x{i + 1}", f"x{j + 1}")
            assert (got == {"t"}) == bool(form[i][j])
    assert d.check().ok and d.half_dimension_ok()


def test_intersection_form_json():
    n, attach = parse_intersection_form('{"diagonal": [1, 0], "offdiagonal": [[1, 2, 1]]}')
    assert n == 2 and attach.eta == {1: 1, 2: 0} and attach.omega == {(1, 2): 1}
    with pytest.raises(ParseError):
        parse_intersection_form("{")
    with pytest.raises(ParseError):
        parse_intersection_form('{"offdiagonal": []}')
    with pytest.raises(ParseError):
        parse_intersection_form('{"diagonal": [1], "offdiagonal": [[1, 2]]}')


def test_zero_spheres():
    d = realize_four_complex(0, AttachingElement())
    assert find_isomorphism(d.cohomology_fixed, sphere("S4", 4)) is not None
