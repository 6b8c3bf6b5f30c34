from ._brm import *  # noqa: F401,F403
from ._brm import GuardExceeded, suites, verify

__all__ = [name for name in dir() if not name.startswith("_")]
