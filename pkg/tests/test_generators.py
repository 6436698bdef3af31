import math

import numpy as np
import pytest

from jordanlevels.curve import CurveError, validate
from jordanlevels.generators import (SnowflakeSpec, circle_curve, dumbbell, regular_ngon, rohde_snowflake,
                                     sharplqc_curve, sharplqc_params, staircase_sharpljc, staircase_tooth)
from jordanlevels.geom import Segment


def test_regular_ngon():
    hexa = regular_ngon(6, 1.0)
    assert hexa.length == pytest.approx(6)
    assert hexa.diameter == pytest.approx(2)
    assert validate(hexa).ok


def test_circle():
    c = circle_curve(2.0, (1.0, -1.0))
    assert c.length == pytest.approx(4 * math.pi)
    assert c.signed_area == pytest.approx(4 * math.pi)


def test_staircase_teeth_are_dyadic():
    for n in range(1, 9):
        x, y, h = staircase_tooth(n)
        w = y[0] - x[0]
        assert w == 2.0 ** (-n - 2)
        assert h == w * (0.5 + 2.0 ** -n)
        assert math.frexp(h)[0] * 2 ** 53 == int(math.frexp(h)[0] * 2 ** 53)
    c = staircase_sharpljc(6)
    assert validate(c).ok
    with pytest.raises(ValueError):
        staircase_sharpljc(0)


def test_sharplqc_arcs():
    c = sharplqc_curve(24, 4)
    assert validate(c).ok
    for n in range(1, 5):
        centre, r, alpha = sharplqc_params(n)
        assert r == 4.0 ** (-n - 2)
        assert centre[0] == 2.0 ** -n
        assert centre[1] == pytest.approx(-r * math.sin(alpha))
    with pytest.raises(ValueError):
        sharplqc_curve(8, 4)


@pytest.mark.parametrize("rule", ["all_bump", "all_flat"])
def test_snowflake_equal_edges(rule):
    s = rohde_snowflake(SnowflakeSpec(6, 0.3, 2, rule))
    lengths = np.array([e.length for e in s.edges])
    assert len(lengths) == 6 * 16
    assert np.allclose(lengths, lengths[0], rtol=1e-12)
    assert validate(s).ok


def test_snowflake_seeded_is_deterministic():
    a = rohde_snowflake(SnowflakeSpec(6, 0.26, 3, "seeded", 11))
    b = rohde_snowflake(SnowflakeSpec(6, 0.26, 3, "seeded", 11))
    assert [e.a for e in a.edges] == [e.a for e in b.edges]
    assert validate(a).ok


def test_snowflake_flat_quarter_is_ngon():
    s = rohde_snowflake(SnowflakeSpec(6, 0.25, 2, "all_bump"))
    assert s.length == pytest.approx(6)


@pytest.mark.parametrize("kw", [dict(N=2), dict(p=0.5), dict(p=0.2), dict(depth=-1), dict(choice_rule="x"),
                                dict(depth=12)])
def test_snowflake_spec_rejects(kw):
    with pytest.raises(ValueError):
        SnowflakeSpec(**kw)


def test_dumbbell():
    d = dumbbell(0.5)
    assert validate(d).ok and all(isinstance(e, Segment) for e in d.edges)
    assert d.signed_area == pytest.approx(2.5)
    with pytest.raises(ValueError):
        dumbbell(1.0)


def test_curve_error_type():
    assert issubclass(CurveError, ValueError)


def test_seeded_snowflake_is_chordal_below_half():
    from jordanlevels.constants import zeta_limit
    s = rohde_snowflake(SnowflakeSpec(6, 0.26, 3, "seeded", 7))
    assert validate(s).ok
    assert zeta_limit(s).value < 0.5
