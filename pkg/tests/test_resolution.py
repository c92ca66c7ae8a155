import pytest
from hypothesis import given
import hypothesis.strategies as st

from core.models.complex import FieldConfig
from core.models.element import TaylorElement
from core.models.monomial import Monomial
from core.tools.errors import GuardExceededError
from core.tools.monomial_core import minimalize_generators
from core.tools.resolution import (
    differential_matrix,
    is_minimal,
    merge_sign,
    taylor_differential,
    taylor_product,
    taylor_resolution,
    tor_betti_via_taylor,
)
from core.tools.rooting import lyubeznik_resolution
from core.tools.simplicial import is_supporting_resolution
from tests.strategies import ideals_with_faces, monomial_ideals


def test_merge_sign():
    assert merge_sign((1,), (2,)) == 1
    assert merge_sign((2,), (1,)) == -1
    assert merge_sign((1, 3), (2,)) == -1
    assert merge_sign((1,), (1, 2)) == 0


def test_triangle_lyubeznik_complex(triangle):
    fc = lyubeznik_resolution(triangle)
    assert fc.faces == [(), (1,), (2,), (3,), (1, 2), (1, 3)]
    assert fc.ranks() == [1, 3, 2]
    assert is_minimal(fc).verdict
    assert differential_matrix(fc, 1) == [["x*y", "y*z", "x*z"]]
    assert differential_matrix(fc, 2) == [["-z", "-z"], ["x", "0"], ["0", "y"]]


def test_taylor_is_not_minimal_for_triangle(triangle):
    fc = taylor_resolution(triangle)
    assert fc.ranks() == [1, 3, 3, 1]
    verdict = is_minimal(fc)
    assert not verdict.verdict
    assert verdict.witness_face == [1, 2, 3]


def test_taylor_product_coefficient(triangle):
    m = triangle.m
    prod = taylor_product(triangle, TaylorElement.basis((2,), m), TaylorElement.basis((3,), m))
    assert prod == TaylorElement({((0, 0, 1), (2, 3)): 1})
    swapped = taylor_product(triangle, TaylorElement.basis((3,), m), TaylorElement.basis((2,), m))
    assert swapped == -prod


def test_betti_numbers(triangle, complete_intersection, x_squared):
    assert tor_betti_via_taylor(triangle).totals == [1, 3, 2]
    assert tor_betti_via_taylor(complete_intersection).totals == [1, 2, 1]
    assert tor_betti_via_taylor(x_squared).totals == [1, 1]


def test_betti_numbers_do_not_depend_on_threads(triangle):
    assert tor_betti_via_taylor(triangle, threads=4) == tor_betti_via_taylor(triangle)


def test_betti_numbers_over_f2(triangle):
    table = tor_betti_via_taylor(triangle, FieldConfig.parse("f2"))
    assert table.totals == [1, 3, 2]
    assert table.field == "fp:2"


def test_subset_guard(triangle):
    with pytest.raises(GuardExceededError):
        taylor_resolution(triangle, guard=2)


@given(monomial_ideals())
def test_taylor_complex_resolves(ideal):
    fc = taylor_resolution(ideal)
    assert is_supporting_resolution(fc.complex, ideal).verdict


@given(monomial_ideals())
def test_betti_alternating_sum_vanishes(ideal):
    totals = tor_betti_via_taylor(ideal).totals
    assert totals[0] == 1
    assert totals[1] == ideal.r
    assert sum((-1) ** j * b for j, b in enumerate(totals)) == 0


def _u(ideal, face):
    return TaylorElement.basis(face, ideal.m)


@given(ideals_with_faces())
def test_taylor_product_is_associative(case):
    ideal, (a, b, c) = case
    ua, ub, uc = _u(ideal, a), _u(ideal, b), _u(ideal, c)
    left = taylor_product(ideal, taylor_product(ideal, ua, ub), uc)
    right = taylor_product(ideal, ua, taylor_product(ideal, ub, uc))
    assert left == right


@given(ideals_with_faces(count=2))
def test_taylor_product_is_graded_commutative(case):
    ideal, (a, b) = case
    ua, ub = _u(ideal, a), _u(ideal, b)
    sign = -1 if len(a) * len(b) % 2 else 1
    assert taylor_product(ideal, ua, ub) == taylor_product(ideal, ub, ua).scaled(sign)


@given(ideals_with_faces(count=2))
def test_leibniz_rule(case):
    ideal, (a, b) = case
    ua, ub = _u(ideal, a), _u(ideal, b)
    lhs = taylor_differential(ideal, taylor_product(ideal, ua, ub))
    rhs = taylor_product(ideal, taylor_differential(ideal, ua), ub)
    rhs = rhs + taylor_product(ideal, ua, taylor_differential(ideal, ub)).scaled(-1 if len(a) % 2 else 1)
    assert lhs == rhs


@given(monomial_ideals(), st.randoms(use_true_random=False))
def test_betti_numbers_do_not_depend_on_generator_order(ideal, rnd):
    gens = list(ideal.generators)
    rnd.shuffle(gens)
    shuffled = minimalize_generators([Monomial(exponents=g.exponents) for g in gens], ideal.ctx)
    assert tor_betti_via_taylor(shuffled) == tor_betti_via_taylor(ideal)
