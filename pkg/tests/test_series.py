import pytest
from pydantic import ValidationError

from core.models.series import PowerSeries
from core.tools.config import set_guard_overrides
from core.tools.errors import GuardExceededError, InputError
from core.tools.series import (
    bar_slices,
    bar_tor_dims,
    default_caps,
    golod_bound_series,
    poincare_report,
    standard_monomials,
)


def test_bound_for_a_hypersurface():
    series = golod_bound_series([1, 1], 1, 5)
    assert series.coefficients == [1] * 6


def test_bound_for_betti_1_3_2():
    series = golod_bound_series([1, 3, 2], 3, 3)
    assert series.coefficients == [1, 3, 6, 12]
    assert series.denominator.replace(" ", "") in ("-2*t**3-3*t**2+1", "1-3*t**2-2*t**3")


def test_bound_for_betti_1_2_1():
    assert golod_bound_series([1, 2, 1], 2, 3).coefficients == [1, 2, 3, 5]


def test_bound_rejects_bad_input():
    with pytest.raises(InputError):
        golod_bound_series([2, 1], 1, 3)
    with pytest.raises(InputError):
        golod_bound_series([1, 1], 1, -1)


def test_power_series_length_is_checked():
    with pytest.raises(ValidationError):
        PowerSeries(coefficients=[1, 2], order=3)


def test_standard_monomials(x_squared, triangle):
    assert standard_monomials(x_squared, 4) == [(1,)]
    assert standard_monomials(triangle, 2) == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2)]


def test_default_caps(triangle):
    assert default_caps(triangle, 3) == [1, 2, 3, 4]


def test_bar_oracle_for_x_squared(x_squared):
    result = bar_tor_dims(x_squared, 4)
    assert result.dims == [1, 1, 1, 1, 1]
    assert all(result.stabilized)


def test_bar_oracle_for_triangle(triangle):
    assert bar_tor_dims(triangle, 3).dims == [1, 3, 6, 12]


def test_bar_basis_guard(triangle):
    set_guard_overrides(bar_basis=5)
    with pytest.raises(GuardExceededError):
        bar_slices(triangle, 2, 3)


def test_caps_must_cover_every_degree(triangle):
    with pytest.raises(InputError):
        bar_tor_dims(triangle, 3, caps=[1, 2])


def test_golod_ring_meets_the_bound(triangle):
    report = poincare_report(triangle, 3)
    assert report.betti == [1, 3, 2]
    assert report.equality and report.serre_inequality
    assert report.strict_at is None


def test_complete_intersection_is_strictly_below_the_bound(complete_intersection):
    report = poincare_report(complete_intersection, 3)
    assert report.bound.coefficients == [1, 2, 3, 5]
    assert report.oracle.dims == [1, 2, 3, 4]
    assert report.strict_at == 3
    assert report.serre_inequality and not report.equality
    assert [c.relation for c in report.comparisons] == ["=", "=", "=", "<"]
    assert poincare_report(complete_intersection, 2).equality
