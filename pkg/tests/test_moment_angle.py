import pytest

from core.models.complex import FieldConfig
from core.tools.moment_angle import moment_angle_ranks


@pytest.mark.parametrize(
    "facets, m, expected",
    [
        ([(1,), (2,), (3,)], 3, {0: 1, 3: 3, 4: 2}),
        ([(1, 2), (2, 3)], 3, {0: 1, 3: 1}),
        ([(1, 2, 3)], 3, {0: 1}),
        ([(1, 2), (2, 3), (1, 3)], 3, {0: 1, 5: 1}),
    ],
)
def test_ranks(facets, m, expected):
    report = moment_angle_ranks(facets, m)
    assert report.ranks == expected
    assert report.hochster_agrees


def test_stanley_reisner_generators_are_reported():
    report = moment_angle_ranks([(1, 2), (2, 3)], 3)
    assert report.stanley_reisner == ["x1*x3"]


def test_square_is_a_product_of_spheres():
    report = moment_angle_ranks([(1, 2), (2, 3), (3, 4), (1, 4)], 4, FieldConfig.parse("f2"))
    assert report.ranks == {0: 1, 3: 2, 6: 1}
    assert report.stanley_reisner == ["x1*x3", "x2*x4"]
