import pytest
from hypothesis import given

from core.models.rooting import TotalOrder
from core.tools.ainfty import transfer_diagram
from core.tools.config import set_guard_overrides
from core.tools.errors import GuardExceededError, NotRootedPresentationError
from core.tools.massey import (
    MasseyCalculator,
    br_condition,
    cross_check_mu,
    homology_basis,
    massey_product,
)
from core.tools.resolution import tor_betti_via_taylor
from tests.strategies import monomial_ideals


def test_homology_basis_of_triangle(triangle):
    basis = homology_basis(triangle)
    assert basis.dims() == [1, 3, 2]
    assert basis.positive_classes() == [1, 2, 3, 4, 5]
    exported = basis.export()
    assert exported[0].degree == 0 and exported[0].multidegree == "1"
    assert [c.multidegree for c in exported[1:4]] == ["x*y", "y*z", "x*z"]
    assert all(c.multidegree == "x*y*z" for c in exported[4:])


def test_products_vanish_on_triangle(triangle):
    basis = homology_basis(triangle)
    for a in basis.positive_classes():
        for b in basis.positive_classes():
            res = massey_product(basis, [a, b])
            assert res.defined and res.contains_zero


def test_product_survives_for_complete_intersection(complete_intersection):
    basis = homology_basis(complete_intersection)
    res = massey_product(basis, [1, 2])
    assert res.defined
    assert res.contains_zero is False
    assert res.multidegree == "x^2*y^2"
    assert res.degree == 2
    assert res.representative in (["1"], ["-1"])


def test_triple_product_with_live_sub_product(complete_intersection):
    basis = homology_basis(complete_intersection)
    res = massey_product(basis, [1, 1, 2])
    assert res.defined is False
    assert "sub-product" in res.note


def test_triple_product_in_empty_strand(x_squared):
    res = massey_product(homology_basis(x_squared), [1, 1, 1])
    assert res.defined and res.contains_zero
    assert res.indeterminacy_dim == 0
    assert res.only_zero


def test_single_class_is_not_a_product(triangle):
    basis = homology_basis(triangle)
    with pytest.raises(ValueError):
        MasseyCalculator(basis).product([1])


def test_massey_guard(triangle):
    set_guard_overrides(massey_k=2)
    basis = homology_basis(triangle)
    with pytest.raises(GuardExceededError):
        MasseyCalculator(basis).product([1, 2, 3])


def test_seed_does_not_change_the_verdict(triangle):
    basis = homology_basis(triangle)
    plain = massey_product(basis, [1, 2, 3])
    seeded = massey_product(basis, [1, 2, 3], seed=7)
    assert plain.defined == seeded.defined
    assert plain.contains_zero == seeded.contains_zero


def test_br_condition(triangle, complete_intersection):
    report = br_condition(triangle, 3)
    assert report.holds
    assert report.tuples_checked == 5 ** 2 + 5 ** 3
    failed = br_condition(complete_intersection, 3)
    assert failed.holds is False
    assert failed.failed_arity == 2


def test_cross_check(triangle, complete_intersection):
    report = cross_check_mu(transfer_diagram(triangle))
    assert report.passed
    assert cross_check_mu(transfer_diagram(complete_intersection)).passed


def test_cross_check_needs_minimal_resolution(max_ideal_square):
    D = transfer_diagram(max_ideal_square, order=TotalOrder(sequence=[1, 2, 3]))
    with pytest.raises(NotRootedPresentationError):
        cross_check_mu(D)


@given(monomial_ideals())
def test_homology_dims_match_betti_numbers(ideal):
    assert homology_basis(ideal).dims() == tor_betti_via_taylor(ideal).totals


def test_b2_gives_triple_products_without_indeterminacy(triangle):
    assert br_condition(triangle, 2).holds
    basis = homology_basis(triangle)
    degree_one = [k for k in basis.positive_classes() if basis.classes[k].degree == 1]
    assert len(degree_one) == 3
    for a in degree_one:
        for b in degree_one:
            for c in degree_one:
                res = massey_product(basis, [a, b, c])
                assert res.indeterminacy_dim == 0
                assert res.only_zero
