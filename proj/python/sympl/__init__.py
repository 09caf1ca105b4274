"""Exact weight, orbit, L-factor and Fourier-expansion computations for Sp(2n).

Rationals are exchanged as ``fractions.Fraction``; structured results come
back as dictionaries in the same shape as the command line's JSON output.
"""

from ._sympl import *  # noqa: F401,F403
from ._sympl import SymplError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
