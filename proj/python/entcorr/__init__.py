"""Entanglement of two-qubit marginals bounded by global correlation monotones."""

from ._entcorr import *  # noqa: F401,F403
from ._entcorr import __version__
