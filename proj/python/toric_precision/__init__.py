"""Exact rational linear precision, toric fiber products and closed-form MLEs."""

from fractions import Fraction

from ._toric_precision import *  # noqa: F401,F403
from ._toric_precision import __version__


def fractions(values):
    """Convert the library's "p/q" strings to Fraction objects."""
    return [Fraction(v) for v in values]
