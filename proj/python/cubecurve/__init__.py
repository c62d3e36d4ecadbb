"""Point counts and identity checks for y^2 = x^3 + a^3 over F_p, p = 1 (mod 6)."""

from ._core import *  # noqa: F401,F403
from ._core import CurveError, Curve, __doc__  # noqa: F401

__version__ = "0.1.0"
