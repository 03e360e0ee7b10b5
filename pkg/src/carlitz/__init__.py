"""Exact Carlitz calculus over F_q[theta].

Factorial tables and polynomial families, expansion engines, the
divided-power measure transform, digit-permutation actions, and
characteristic-p zeta series with Newton-polygon zero analysis.
"""

from .basis import CarlitzContext

__all__ = ["CarlitzContext"]
__version__ = "0.1.0"
