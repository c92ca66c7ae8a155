from itertools import product

import pytest
from hypothesis import given

from core.tools.errors import InputError, NoNonFaceError
from core.tools.simplicial import (
    complex_from_faces,
    euler_characteristic,
    hochster_ranks,
    is_supporting_resolution,
    minimal_nonfaces,
    plain_complex,
    reduced_homology_ranks,
    restrict_to_multidegree,
    stanley_reisner_ideal,
)
from tests.strategies import ideals_with_complex


def test_reduced_homology_of_a_circle():
    circle = plain_complex([(1, 2), (2, 3), (1, 3)], 3)
    assert reduced_homology_ranks(circle) == [0, 0, 1]
    assert euler_characteristic(circle) == -1 + 3 - 3


def test_reduced_homology_of_two_points():
    assert reduced_homology_ranks(plain_complex([(1,), (2,)], 2)) == [0, 1]


def test_minimal_nonfaces_of_path():
    assert minimal_nonfaces([(1, 2), (2, 3)], 3) == [(1, 3)]


def test_stanley_reisner_ideal():
    ideal = stanley_reisner_ideal([(1,), (2,), (3,)], 3)
    assert ideal.generator_texts() == ["x1*x2", "x1*x3", "x2*x3"]
    with pytest.raises(NoNonFaceError):
        stanley_reisner_ideal([(1, 2, 3)], 3)


def test_facet_outside_vertex_range():
    with pytest.raises(InputError):
        stanley_reisner_ideal([(1, 4)], 3)


def test_hochster_for_three_points():
    ranks = hochster_ranks([(1,), (2,), (3,)], 3)
    assert ranks == [((), 0, 1), ((1, 2), 1, 1), ((1, 3), 1, 1), ((2, 3), 1, 1), ((1, 2, 3), 2, 2)]


def test_lyubeznik_faces_support_a_resolution(triangle):
    cx = complex_from_faces(triangle, [(1, 2), (1, 3)])
    assert is_supporting_resolution(cx, triangle).verdict


def test_path_of_generators_does_not_resolve(triangle):
    cx = complex_from_faces(triangle, [(1,), (2,), (3,)])
    verdict = is_supporting_resolution(cx, triangle)
    assert not verdict.verdict
    assert verdict.witness_text == "x*y*z"


def _acyclic_everywhere(cx, ideal):
    top = ideal.label(tuple(range(1, ideal.r + 1)))
    for mu in product(*[range(e + 1) for e in top]):
        sub = restrict_to_multidegree(cx, mu)
        if sub.top_size > 0 and any(reduced_homology_ranks(sub)):
            return False
    return True


@given(ideals_with_complex(max_vars=4, max_gens=4))
def test_lattice_check_matches_every_multidegree(case):
    ideal, facets = case
    cx = complex_from_faces(ideal, facets)
    assert is_supporting_resolution(cx, ideal).verdict == _acyclic_everywhere(cx, ideal)


@given(ideals_with_complex())
def test_restriction_is_idempotent(case):
    ideal, facets = case
    cx = complex_from_faces(ideal, facets)
    for k in range(1, ideal.r + 1):
        mu = ideal.gen(k)
        once = restrict_to_multidegree(cx, mu)
        twice = restrict_to_multidegree(once, mu)
        assert twice.faces == once.faces
        assert twice.labels == once.labels
        assert once.is_subset_closed()
