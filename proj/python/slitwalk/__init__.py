"""Exact enumeration and generating functions for walks on the slit plane."""

from ._core import *  # noqa: F401,F403
from ._core import SlitwalkError, ResourceGuardExceeded  # noqa: F401
