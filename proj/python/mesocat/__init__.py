"""Resonant-cavity mesoscopic-superposition simulator."""

from ._mesocat import *  # noqa: F401,F403
from ._mesocat import __doc__  # noqa: F401
