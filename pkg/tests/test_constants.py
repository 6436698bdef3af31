import math

import numpy as np
import pytest

from jordanlevels.constants import (ConstantReport, Sampler, check_chordal, chord_arc_constant, delta_linear,
                                    two_point_constant, zeta_limit, zeta_pair, zeta_sup)
from jordanlevels.generators import circle_curve, polygon, regular_ngon, staircase_sharpljc

SQ = polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def corner_oracle(a):
    # deviation of the corner from the chord, a/sqrt2, over chord a*sqrt2
    return (a / math.sqrt(2)) / (a * math.sqrt(2))


@pytest.mark.parametrize("a", [0.1, 0.2])
def test_square_corner_pair(a):
    x, y = (1 - a, 0.0), (1.0, a)
    assert zeta_pair(SQ, x, y) == pytest.approx(corner_oracle(a), abs=1e-12)


def test_circle_chord_pair():
    theta = math.pi / 2
    oracle = (1 - math.cos(theta / 2)) / (2 * math.sin(theta / 2))
    assert oracle == pytest.approx(math.tan(theta / 4) / 2)
    c = circle_curve(1.0)
    assert zeta_pair(c, (1.0, 0.0), (0.0, 1.0)) == pytest.approx(oracle, abs=1e-12)


def test_zeta_pair_rejects_equal_points():
    with pytest.raises(ValueError):
        zeta_pair(SQ, (0.5, 0.0), (0.5, 0.0))


def test_hexagon_zeta():
    phi = 2 * math.pi / 3
    rep = zeta_sup(regular_ngon(6), 1.0)
    assert isinstance(rep, ConstantReport) and rep.kind == "zeta_sup"
    assert rep.value == pytest.approx(0.5 / math.tan(phi / 2), abs=1e-6)
    assert rep.refined and rep.samples_used > 0


def test_square_zeta_at_side_scale():
    assert zeta_sup(SQ, 1.0).value == pytest.approx(0.5, abs=1e-6)


def test_staircase_zeta_lower_bound():
    assert zeta_sup(staircase_sharpljc(8), 0.25).value >= 0.75 - 1e-12


def test_zeta_limit_monotone():
    rep = zeta_limit(SQ)
    vals = [v for _, v in rep.sequence]
    assert all(v == pytest.approx(0.5, abs=1e-6) for v in vals)
    circ = zeta_limit(circle_curve(1.0))
    cv = [v for _, v in circ.sequence]
    assert all(b <= a + 1e-12 for a, b in zip(cv, cv[1:]))
    assert cv[-1] < 0.01


def test_two_point_and_chord_arc():
    c = circle_curve(1.0)
    assert two_point_constant(c).value == pytest.approx(1.0, abs=1e-6)
    assert chord_arc_constant(c).value == pytest.approx(math.pi / 2, abs=1e-3)
    assert chord_arc_constant(SQ).value == pytest.approx(2.0, abs=1e-3)
    # antipodal vertices of the unit hexagon: path 3 over chord 2
    assert chord_arc_constant(regular_ngon(6)).value >= 1.5


def test_witness_realises_value():
    rep = chord_arc_constant(SQ)
    x, y = rep.witness
    from jordanlevels.constants import chord_arc_ratio
    assert chord_arc_ratio(SQ, x, y) == pytest.approx(rep.value, abs=1e-12)


def test_delta_straight_piece_is_zero():
    assert delta_linear(SQ, (0.5, 0.0), 0.2).value == pytest.approx(0.0, abs=1e-12)


def test_delta_square_corner_brute_force():
    # brute force over 10^4 directions through the corner
    r = 0.2
    ang = np.linspace(0, math.pi, 10_000, endpoint=False)
    ends = np.array([[-r, 0.0], [0.0, r]])   # corner at (1,0): legs along -x and +y
    n = np.stack([-np.sin(ang), np.cos(ang)], axis=1)
    brute = np.abs(ends @ n.T).max(axis=0).min() / r
    assert delta_linear(SQ, (1.0, 0.0), r).value == pytest.approx(brute, abs=1e-6)


def test_delta_circle_below_four_zeta():
    c = circle_curve(1.0)
    r = 0.1
    z = zeta_sup(c, 2 * r).value
    assert delta_linear(c, (1.0, 0.0), r).value <= 4 * z


def test_check_chordal():
    ok, _ = check_chordal(SQ, 0.5 + 1e-9, 1.0)
    assert ok
    ok, rep = check_chordal(staircase_sharpljc(6), 0.5, 0.25)
    assert not ok and rep.value > 0.5


def test_sampler_budget():
    with pytest.raises(ValueError):
        zeta_sup(SQ, 1.0, Sampler(net=0))
    with pytest.raises(ValueError):
        zeta_sup(SQ, -1.0)
