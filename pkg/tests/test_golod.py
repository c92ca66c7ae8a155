import pytest
from hypothesis import assume, given

from core.models.rooting import TotalOrder
from core.tools.ainfty import transfer_diagram, verify_stasheff
from core.tools.errors import NotRootedPresentationError
from core.tools.golod import gcd_condition, golod_verdict, pi_gcd
from core.tools.massey import cross_check_mu
from core.tools.monomial_core import ideal_from_texts
from core.tools.resolution import is_minimal
from core.tools.rooting import certify_rooted_ring, lyubeznik_rooting
from tests.strategies import monomial_ideals


def test_triangle_is_golod(triangle):
    report = golod_verdict(triangle, order=TotalOrder.identity(3))
    assert report.verdict == "Golod"
    assert report.criteria() == [True] * 5
    assert report.order == [1, 2, 3]
    assert report.warnings == []


def test_complete_intersection_is_not_golod(complete_intersection):
    report = golod_verdict(complete_intersection)
    assert report.verdict == "NotGolod"
    assert report.criteria() == [False] * 5
    assert report.gcd_condition.witness == [[1, 2]]
    assert report.gcd_condition.witness_text == "x^2, y^2"
    assert report.product_vanishes.witness == [[1], [2]]


def test_max_ideal_square(max_ideal_square):
    with pytest.raises(NotRootedPresentationError):
        golod_verdict(max_ideal_square, order=TotalOrder(sequence=[1, 2, 3]))
    report = golod_verdict(max_ideal_square, order=TotalOrder(sequence=[2, 1, 3]))
    assert report.verdict == "Golod"


def test_x_squared_is_golod(x_squared):
    assert golod_verdict(x_squared).verdict == "Golod"


def test_degree_one_generator_warns():
    report = golod_verdict(ideal_from_texts(["x", "y"], ["x", "y^2"]))
    assert report.verdict == "NotGolod"
    assert report.warnings


def test_nine_variable_gcd_condition(nine_variable):
    assert gcd_condition(nine_variable).holds


def test_nine_variable_is_golod(nine_variable):
    order = TotalOrder.identity(7)
    D = transfer_diagram(nine_variable, order=order)
    assert is_minimal(D.F).verdict
    assert D.F.ranks() == [1, 7, 12, 6]
    report = golod_verdict(nine_variable, order=order)
    assert report.verdict == "Golod"
    assert report.criteria() == [True] * 5


def test_nine_variable_higher_operations(nine_variable):
    D = transfer_diagram(nine_variable, order=TotalOrder.identity(7))
    assert verify_stasheff(D, 4).passed
    report = cross_check_mu(D, n_max=3)
    assert report.passed
    assert report.n_max == 3


def test_pi_gcd_depends_on_the_rooting(complete_intersection):
    for seq in ([1, 2], [2, 1]):
        pi = lyubeznik_rooting(complete_intersection, TotalOrder(sequence=seq))
        assert not pi_gcd(complete_intersection, pi).holds


def test_threads_do_not_change_the_report(triangle):
    assert golod_verdict(triangle, threads=3) == golod_verdict(triangle)


@given(monomial_ideals())
def test_criteria_agree_on_rooted_rings(ideal):
    cert = certify_rooted_ring(ideal)
    assume(cert.rooted)
    report = golod_verdict(ideal, order=TotalOrder(sequence=cert.order))
    assert len(set(report.criteria())) == 1
