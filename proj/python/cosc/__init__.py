"""Steady states of two coupled, damped oscillators: master equations, Langevin and Gibbs references."""

from ._cosc import *  # noqa: F401,F403
from ._cosc import __version__  # noqa: F401
