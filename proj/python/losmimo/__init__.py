"""Line-of-sight MIMO design for dual-polarized planar arrays."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, ConfigError, DomainError, NumericError  # noqa: F401
