"""Explicit constants and desk-scale verification for logarithmic Sobolev
inequalities of fractional and W^{1,p} type.

Everything is implemented in the C++ extension module; this package just
re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
