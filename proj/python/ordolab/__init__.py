"""Minimum linear ordering over submodular functions.

Ground elements and vertices are 0-based. Exact values are fractions.Fraction.
"""

from ordolab._ordolab import *  # noqa: F401,F403
from ordolab._ordolab import __doc__  # noqa: F401
