"""Exact-arithmetic toolkit for rank-3 K3 Picard lattices and rank-2 Ulrich bundles."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
