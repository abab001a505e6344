"""Firefighter problem solvers (C++ core exposed through pybind11)."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
