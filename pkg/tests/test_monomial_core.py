from functools import reduce
from itertools import combinations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from core.models.monomial import Monomial, VariableContext
from core.tools.errors import InputError
from core.tools.monomial_core import (
    build_lcm_lattice,
    divides_exps,
    gcd_exps,
    ideal_from_texts,
    ideal_to_dict,
    lcm_exps,
    monomial_arith,
    mul_exps,
    parse_monomial,
)
from tests.strategies import monomial_ideals

CTX = VariableContext(names=("x", "y", "z"))

exponent_vectors = st.tuples(*[st.integers(min_value=0, max_value=5)] * 3)


def test_parse_and_format():
    mono = parse_monomial("x^2*y", CTX)
    assert mono.exponents == (2, 1, 0)
    assert mono.to_text(CTX) == "x^2*y"
    assert parse_monomial("1", CTX).is_one()
    assert parse_monomial("x*x", CTX).exponents == (2, 0, 0)


@pytest.mark.parametrize("text", ["", "x^", "x^0", "w", "x+y", "2*x"])
def test_parse_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_monomial(text, CTX)


def test_parse_rejects_overflow():
    with pytest.raises(InputError):
        parse_monomial("x^2147483647*x", CTX)


def test_variable_names_must_be_distinct():
    with pytest.raises(ValueError):
        VariableContext(names=("x", "x"))


def test_monomial_arith():
    a = Monomial(exponents=(2, 1, 0))
    b = Monomial(exponents=(1, 3, 0))
    res = monomial_arith(a, b)
    assert res.lcm.exponents == (2, 3, 0)
    assert res.gcd.exponents == (1, 1, 0)
    assert not res.a_divides_b


def test_monomial_arith_context_mismatch():
    with pytest.raises(InputError):
        monomial_arith(Monomial(exponents=(1,)), Monomial(exponents=(1, 0)))


@given(exponent_vectors, exponent_vectors)
def test_lcm_gcd_product(a, b):
    assert mul_exps(lcm_exps(a, b), gcd_exps(a, b)) == mul_exps(a, b)
    assert divides_exps(gcd_exps(a, b), a)
    assert divides_exps(a, lcm_exps(a, b))


def test_minimalize_keeps_declared_order():
    ideal = ideal_from_texts(["x", "y"], ["x*y", "x^2*y", "y^2", "x*y"])
    assert ideal.generator_texts() == ["x*y", "y^2"]
    assert ideal_to_dict(ideal) == {"vars": ["x", "y"], "generators": ["x*y", "y^2"]}


def test_non_minimal_rejected_without_minimalize():
    with pytest.raises(InputError):
        ideal_from_texts(["x", "y"], ["x", "x*y"], minimalize=False)


def test_triangle_lattice(triangle):
    lattice = build_lcm_lattice(triangle)
    assert len(lattice) == 5
    assert lattice.bottom == (0, 0, 0)
    assert lattice.top == (1, 1, 1)
    assert lattice.generator_tags((1, 1, 1)) == frozenset({1, 2, 3})
    assert triangle.label((1, 2)) == (1, 1, 1)
    assert triangle.label(()) == (0, 0, 0)


@given(monomial_ideals())
def test_lattice_is_every_subset_lcm(ideal):
    gens = ideal.gens()
    expected = set()
    for k in range(len(gens) + 1):
        for subset in combinations(gens, k):
            expected.add(reduce(lcm_exps, subset, (0,) * ideal.m))
    lattice = build_lcm_lattice(ideal)
    assert set(lattice.elements) == expected
    assert len(lattice) == len(expected)
    for e in lattice.elements:
        assert lattice.generator_tags(e) == frozenset(
            i for i, g in enumerate(gens, start=1) if divides_exps(g, e))


def test_product_overflow_is_an_input_error():
    with pytest.raises(InputError):
        mul_exps((2 ** 31 - 1, 0), (1, 0))
