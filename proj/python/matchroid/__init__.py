"""Matroids over abelian groups: construction and matchability checking."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
