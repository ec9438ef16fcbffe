"""Entropy-stable finite-difference solver for the ideal two-fluid plasma
equations, with IMEX time stepping built on exact local source solves."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
