"""Exception hierarchy shared by all modules.

Two families matter to callers (and to the CLI exit-code contract):

* ``CarlitzDomainError`` -- a mathematically invalid request (dividing by
  zero, exponentiating a non-monic, decomposing zero, ...).  CLI exit 2.
* ``CarlitzGuardError``  -- a size/enumeration guard tripped; the request
  may be valid but is outside desk scale.  CLI exit 3.

Every concrete class carries a short machine-readable ``name``.
"""

from __future__ import annotations


class CarlitzError(Exception):
    name = "error"


class CarlitzDomainError(CarlitzError):
    name = "domain"


class CarlitzGuardError(CarlitzError):
    name = "guard"


class EnumerationTooLargeError(CarlitzGuardError):
    name = "enumeration-too-large"


class IndexGuardError(CarlitzGuardError):
    name = "index-guard"


class ZeroDecompositionError(CarlitzDomainError):
    name = "zero-decomposition"


class NotOneUnitError(CarlitzDomainError):
    name = "not-one-unit"


class NonMonicError(CarlitzDomainError):
    name = "non-monic"


class BracketIndexError(CarlitzDomainError):
    name = "bracket-index"


class LevelTooSmallError(CarlitzDomainError):
    name = "level-too-small"


class WindowOverflowError(CarlitzDomainError):
    name = "window-overflow"


class PrecisionError(CarlitzDomainError):
    name = "precision"


class DegeneratePolygonError(CarlitzDomainError):
    name = "degenerate-polygon"


class ConvergenceError(CarlitzDomainError):
    name = "convergence"


class NotIntegerError(CarlitzDomainError):
    name = "not-an-integer"
