import pytest
from hypothesis import assume, given

from core.models.rooting import TotalOrder
from core.tools.errors import GuardExceededError, InputError
from core.tools.io_loader import JSONInputFile
from core.tools.massey import homology_basis
from core.tools.monomial_core import build_lcm_lattice, ideal_from_texts
from core.tools.resolution import is_minimal, tor_betti_via_taylor
from core.tools.rooting import (
    certify_rooted_ring,
    lyubeznik_resolution,
    lyubeznik_rooting,
    parse_order,
    rooted_complex,
    rooted_resolution,
    rooting_from_dict,
    rooting_to_dict,
    validate_rooting_map,
)
from core.tools.simplicial import is_supporting_resolution
from tests.fixtures import fixture_ideal, fixture_path
from tests.strategies import ideals_with_order, monomial_ideals


def test_user_rooting_matches_lyubeznik(triangle):
    pi = rooting_from_dict(JSONInputFile(fixture_path("triangle_pi")).load(), triangle)
    lyub = lyubeznik_rooting(triangle, TotalOrder.identity(3))
    assert pi.assignment == lyub.assignment
    assert rooting_to_dict(lyub, triangle) == {"x*y": 1, "y*z": 2, "x*z": 3, "x*y*z": 1}
    assert rooted_resolution(triangle, pi).kind == "rooted"


def test_divisibility_axiom(triangle):
    pi = rooting_from_dict({"x*y": 2, "y*z": 2, "x*z": 3, "x*y*z": 1}, triangle)
    check = validate_rooting_map(pi, build_lcm_lattice(triangle), triangle)
    assert not check.valid
    assert check.violation.axiom == 1
    assert check.violation.element == "x*y"


def test_coherence_axiom():
    ideal = ideal_from_texts(["x", "y", "z"], ["x", "y", "z"])
    pi = rooting_from_dict({"x": 1, "y": 2, "z": 3, "x*y": 2, "x*z": 1, "y*z": 2, "x*y*z": 1}, ideal)
    check = validate_rooting_map(pi, build_lcm_lattice(ideal), ideal)
    assert not check.valid
    assert check.violation.axiom == 2
    with pytest.raises(InputError):
        rooted_complex(ideal, pi)


def test_partial_rooting_map(triangle):
    pi = rooting_from_dict({"x*y": 1, "y*z": 2, "x*z": 3}, triangle)
    assert validate_rooting_map(pi, build_lcm_lattice(triangle), triangle).violation.axiom == 0


def test_order_changes_the_complex(max_ideal_square):
    fc = lyubeznik_resolution(max_ideal_square, TotalOrder(sequence=[1, 2, 3]))
    assert fc.ranks() == [1, 3, 3, 1]
    assert not is_minimal(fc).verdict
    fc = lyubeznik_resolution(max_ideal_square, TotalOrder(sequence=[2, 1, 3]))
    assert fc.ranks() == [1, 3, 2]
    assert is_minimal(fc).verdict


def test_certificate_search(max_ideal_square, triangle):
    cert = certify_rooted_ring(max_ideal_square)
    assert cert.rooted and cert.lyubeznik
    assert cert.order == [2, 1, 3]
    assert cert.rooted_faces == [[1], [2], [3], [1, 2], [2, 3]]
    assert certify_rooted_ring(triangle).rooted


def test_certificate_for_user_map(max_ideal_square):
    bad = lyubeznik_rooting(max_ideal_square, TotalOrder.identity(3))
    cert = certify_rooted_ring(max_ideal_square, "user-supplied", pi=bad)
    assert cert.rooted is None
    with pytest.raises(InputError):
        certify_rooted_ring(max_ideal_square, "user-supplied")


def test_order_guard(triangle):
    with pytest.raises(GuardExceededError):
        certify_rooted_ring(triangle, guard=2)


@pytest.mark.parametrize("text", ["1,2", "1,1,2", "a,b,c", "0,1,2"])
def test_parse_order_rejects(text):
    with pytest.raises(InputError):
        parse_order(text, 3)


def test_parse_order_default():
    assert parse_order(None, 3).sequence == [1, 2, 3]
    assert parse_order("3, 1, 2", 3).sequence == [3, 1, 2]


@given(ideals_with_order())
def test_lyubeznik_rooting_is_valid_and_resolves(case):
    ideal, order = case
    lattice = build_lcm_lattice(ideal)
    pi = lyubeznik_rooting(ideal, order, lattice)
    assert validate_rooting_map(pi, lattice, ideal).valid
    cx = rooted_complex(ideal, pi, lattice)
    assert is_supporting_resolution(cx, ideal).verdict


def test_order_search_guard_on_a_large_ideal():
    ideal = fixture_ideal("reiner_welker")
    assert ideal.r == 13
    assert len(build_lcm_lattice(ideal)) <= 2 ** 7
    with pytest.raises(GuardExceededError):
        certify_rooted_ring(ideal)


@given(ideals_with_order())
def test_rooted_complex_is_subset_closed(case):
    ideal, order = case
    cx = rooted_complex(ideal, lyubeznik_rooting(ideal, order))
    assert cx.is_subset_closed()
    assert () in cx


@pytest.mark.parametrize("name", ["triangle", "complete_intersection", "x_squared", "x_xy", "max_ideal_square",
                                  "nine_variable"])
def test_tor_counts_rooted_faces_on_fixtures(name, request):
    ideal = request.getfixturevalue(name)
    cert = certify_rooted_ring(ideal)
    assert cert.rooted
    ranks = lyubeznik_resolution(ideal, TotalOrder(sequence=cert.order)).ranks()
    assert tor_betti_via_taylor(ideal).totals == ranks
    assert homology_basis(ideal).dims() == ranks


@given(monomial_ideals())
def test_tor_counts_rooted_faces(ideal):
    cert = certify_rooted_ring(ideal)
    assume(cert.rooted)
    fc = lyubeznik_resolution(ideal, TotalOrder(sequence=cert.order))
    assert tor_betti_via_taylor(ideal).totals == fc.ranks()
