import numpy as np
import pytest

from jordanlevels import _kernels
from jordanlevels.constants import build_samples, zeta_sup
from jordanlevels.generators import SnowflakeSpec, circle_curve, rohde_snowflake, sharplqc_curve
from jordanlevels.levelset import level_set_exact

try:
    from jordanlevels import _core  # noqa: F401
    HAVE_CORE = True
except ImportError:  # pragma: no cover
    HAVE_CORE = False

needs_core = pytest.mark.skipif(not HAVE_CORE, reason="compiled extension not built")


@pytest.fixture
def restore_backend():
    old = _kernels.BACKEND
    yield
    _kernels.use_backend(old)


CURVES = {
    "circle": circle_curve(1.0),
    "sharplqc": sharplqc_curve(24, 3),
    "snowflake": rohde_snowflake(SnowflakeSpec(6, 0.3, 2, "seeded", 5)),
}


def _both(fn):
    _kernels.use_backend("compiled")
    a = fn()
    _kernels.use_backend("python")
    b = fn()
    return a, b


@needs_core
@pytest.mark.parametrize("name", sorted(CURVES))
def test_grid_kernels_agree(name, restore_backend):
    c = CURVES[name]
    x0, y0, x1, y1 = c.bbox
    rng = np.random.default_rng(1)
    px = rng.uniform(x0 - 0.2, x1 + 0.2, 3000)
    py = rng.uniform(y0 - 0.2, y1 + 0.2, 3000)
    # include points exactly on vertices and on chord lines
    verts = np.array([e.start for e in c.edges])
    px, py = np.concatenate([px, verts[:, 0]]), np.concatenate([py, verts[:, 1]])
    d1, d2 = _both(lambda: _kernels.min_distance(px, py, c.table))
    np.testing.assert_allclose(d1, d2, rtol=1e-13, atol=1e-15)
    w1, w2 = _both(lambda: _kernels.winding(px, py, c.table))
    far = d1 > 1e-9
    np.testing.assert_array_equal(np.asarray(w1)[far], np.asarray(w2)[far])


@needs_core
def test_zeta_scan_agrees(restore_backend):
    c = CURVES["snowflake"]
    S = build_samples(c)
    fn = S.feat_next()
    r0 = c.diameter / 8
    args = (S.xy[:, 0], S.xy[:, 1], S.s, fn, S.diam, r0, c.length, c.tol)
    a, b = _both(lambda: _kernels.zeta_scan(*args))
    assert np.allclose(np.asarray(a, dtype=float), np.asarray(b, dtype=float), rtol=1e-12, atol=1e-14)


@needs_core
def test_pipeline_agrees(restore_backend):
    c = CURVES["sharplqc"]
    la, lb = _both(lambda: level_set_exact(c, 0.01).length)
    assert la == pytest.approx(lb, abs=1e-12)
    za, zb = _both(lambda: zeta_sup(c, 0.5).value)
    assert za == pytest.approx(zb, abs=1e-12)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.use_backend("gpu")


def test_arc_table_splits_quarters():
    t = _kernels.edge_table(circle_curve(1.0).edges)
    assert t.shape == (4, 10) and np.all(t[:, 0] == 1.0)
