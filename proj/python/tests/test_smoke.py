import math

import pytest

import dynorb


def test_orbit_pell_example():
    rec = dynorb.orbit("pell(2)", "3/2")
    assert rec["points"][:2] == ["3/2", "81"]
    assert rec["integral_indices"] == [1]


def test_canonical_height_of_two_under_squaring():
    value, radius, _ = dynorb.canheight("x^2", "2", 1e-9)
    assert abs(value - math.log(2)) <= radius + 1e-12


def test_preperiodic():
    assert dynorb.preper("x^2-1", "0")
    assert not dynorb.preper("x^2", "2")


def test_errors_carry_a_kind():
    with pytest.raises(dynorb.DynorbError) as info:
        dynorb.orbit("(x^2-1)/(x^2-x)", "2")
    assert info.value.kind == "DegenerateMap"


def test_reports():
    rows = dynorb.density("(x-1)/(x^3+1)", [5, 10])["rows"]
    assert [r["B"] for r in rows] == [5, 10]
    assert dynorb.ffavg(2, 2, [1])["rows"][0]["population"] == 6
    assert dynorb.avg("phi_t", "t^3+2", [3])["rows"][0]["population"] == 14
