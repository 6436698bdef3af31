"""Level sets of the signed distance to planar Jordan curves."""
from ._kernels import BACKEND
from .curve import CurveError, CurvePoint, JordanCurve, Subarc, checked, validate
from .geom import CircularArc, Point, Segment, Tolerance

__all__ = ["BACKEND", "CircularArc", "CurveError", "CurvePoint", "JordanCurve", "Point", "Segment",
           "Subarc", "Tolerance", "checked", "validate"]
__version__ = "0.1.0"
