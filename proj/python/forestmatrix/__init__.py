"""Exact spanning rooted forest counts and the doubly stochastic graph matrix.

Everything lives in the compiled core; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
