"""False-vacuum decay toolkit (C++ core via pybind11)."""

from ._falsevac import *  # noqa: F401,F403
from ._falsevac import __doc__  # noqa: F401
