"""Noncoherent two-relay diamond network toolkit.

Regime classification, closed-form gDoF values, the reduced bound optimizers
with their grid and LP oracles, achievable-rate evaluation, and seeded Monte
Carlo verification of the supporting inequalities. The heavy lifting lives in
the C++ extension; this package re-exports it.
"""

from ._ncdiamond import *  # noqa: F401,F403
from ._ncdiamond import __version__  # noqa: F401
