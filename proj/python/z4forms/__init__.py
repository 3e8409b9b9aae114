"""Z/4 quadratic enhancements of surface intersection forms."""

from ._z4forms import *  # noqa: F401,F403
from ._z4forms import __version__  # noqa: F401
