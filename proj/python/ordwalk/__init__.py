"""Ordinals below epsilon_0, minimal walks, and ladder colorings."""

from ordwalk._core import *  # noqa: F401,F403
from ordwalk._core import __doc__  # noqa: F401
