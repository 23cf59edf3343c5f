"""Monotone and nonmonotone trust-region methods with a benchmark harness."""

from ._nmtr import *  # noqa: F401,F403
from ._nmtr import __doc__ as _doc

__doc__ = _doc
