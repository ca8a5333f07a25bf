"""Linear-time transitive orientation of prime comparability graphs."""

from ._lextor import *  # noqa: F401,F403
from ._lextor import __version__  # noqa: F401
