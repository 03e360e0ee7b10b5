"""Truncated Laurent series over a finite field, with precision tracking.

A ``LaurentSeries`` stores (lead, coeffs, prec): the coefficient of
``u^j`` is known exactly for all j < prec (prec = None means the value is
exact, i.e. a Laurent polynomial), ``coeffs`` runs ascending from exponent
``lead`` and is trimmed at both ends.  Empty coeffs with prec None is the
exact zero; empty coeffs with finite prec means "zero to precision", a
genuinely weaker statement that the arithmetic keeps distinct.

Precision follows the usual non-archimedean rules: addition keeps the
minimum absolute precision, multiplication of values with valuations
v1, v2 and absolute precisions P1, P2 is known below min(P1+v2, P2+v1),
and inversion preserves relative precision.

Two rings are used downstream: k_infinity = F_q((pi)) with pi = 1/theta
(so a polynomial in theta embeds with lead = -deg), and the (theta)-adic
completion where theta itself is the uniformizer.
"""

from __future__ import annotations

import numpy as np

from .errors import (CarlitzDomainError, NotOneUnitError, PrecisionError,
                     ZeroDecompositionError)
from .padic import PadicInteger, as_padic
from .polys import Poly


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add_prec(p, v):
    # p absolute precision (None = infinite), v valuation lower bound (None = +inf)
    if p is None or v is None:
        return None
    return p + v


class LaurentSeries:
    __slots__ = ("ring", "lead", "coeffs", "prec")

    def __init__(self, ring, lead, coeffs, prec):
        self.ring = ring
        self.lead = lead
        self.coeffs = coeffs
        self.prec = prec

    # -- structure ----------------------------------------------------------

    def is_exact(self) -> bool:
        return self.prec is None

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec is None

    def is_known_zero(self) -> bool:
        """All known coefficients vanish (exact zero or zero-to-precision)."""
        return not self.coeffs

    def valuation(self) -> int:
        """Exact valuation; raises on a known-zero value."""
        if not self.coeffs:
            raise ZeroDecompositionError("valuation of a (known-)zero value")
        return self.lead

    def val_lower_bound(self):
        """Lower bound for the valuation: lead, prec, or None for +infinity."""
        if self.coeffs:
            return self.lead
        return self.prec  # None = exact zero = +infinity

    def coeff(self, j: int) -> int:
        """Coefficient of u^j; must be within the known window."""
        if self.prec is not None and j >= self.prec:
            raise PrecisionError(f"coefficient at exponent {j} is beyond precision")
        if not self.coeffs or j < self.lead or j >= self.lead + len(self.coeffs):
            return 0
        return self.coeffs[j - self.lead]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, n: int):
        return self.ring.pow(self, n)

    def __truediv__(self, other):
        return self.ring.div(self, other)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by u^k (exact reindexing)."""
        return LaurentSeries(self.ring, self.lead + k, self.coeffs,
                             None if self.prec is None else self.prec + k)

    def truncate(self, prec: int) -> "LaurentSeries":
        return self.ring.make(self.lead, self.coeffs, _min_prec(self.prec, prec))

    def scalar(self, c: int) -> "LaurentSeries":
        return self.ring.scalar_mul(c, self)

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries) and other.ring == self.ring
                and other.lead == self.lead and other.coeffs == self.coeffs
                and other.prec == self.prec)

    def __hash__(self):
        return hash((self.lead, self.coeffs, self.prec))

    def __repr__(self):
        var = self.ring.var
        if not self.coeffs:
            return "0" if self.prec is None else f"O({var}^{self.prec})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.lead + i
                terms.append(f"{c}*{var}^{e}" if e else f"{c}")
        tail = "" if self.prec is None else f" + O({var}^{self.prec})"
        return " + ".join(terms) + tail


class LaurentRing:
    """Arithmetic context for F_q((u)) with u a named uniformizer."""

    def __init__(self, field, var: str = "pi"):
        self.field = field
        self.var = var
        self.char = field.char
        self._np = getattr(field, "is_prime_field", False)

    # -- constructors ----------------------------------------------------------

    def make(self, lead: int, coeffs, prec) -> LaurentSeries:
        coeffs = list(coeffs)
        if prec is not None:
            keep = prec - lead
            if keep <= 0:
                coeffs = []
            elif len(coeffs) > keep:
                coeffs = coeffs[:keep]
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        lead += i
        j = len(coeffs)
        while j > 0 and coeffs[j - 1] == 0:
            j -= 1
        coeffs = coeffs[:j]
        if not coeffs:
            lead = 0
        return LaurentSeries(self, lead, tuple(coeffs), prec)

    @property
    def zero(self) -> LaurentSeries:
        return LaurentSeries(self, 0, (), None)

    def zero_to(self, prec: int) -> LaurentSeries:
        return LaurentSeries(self, 0, (), prec)

    @property
    def one(self) -> LaurentSeries:
        return LaurentSeries(self, 0, (1,), None)

    def monomial(self, c: int, e: int, prec=None) -> LaurentSeries:
        return self.make(e, [c], prec)

    def from_field(self, c: int) -> LaurentSeries:
        return self.make(0, [c], None)

    def from_int(self, n: int) -> LaurentSeries:
        return self.from_field(self.field.from_int(n))

    def uniformizer(self) -> LaurentSeries:
        return self.monomial(1, 1)

    def from_apoly(self, f: Poly) -> LaurentSeries:
        """Embed an element of A = F_q[theta], exactly.

        In the infinity ring (var "pi") theta = 1/pi, so degree-d terms land
        at exponent -d; in a "theta" ring the coefficients embed as is.
        """
        if f.is_zero():
            return self.zero
        if self.var == "theta":
            return self.make(0, list(f.coeffs), None)
        return self.make(-f.degree, list(reversed(f.coeffs)), None)

    def from_ratfunc(self, r, prec=None) -> LaurentSeries:
        num = self.from_apoly(r.num)
        den = self.from_apoly(r.den)
        if num.is_exact_zero():
            return self.zero
        return self.div(num, den, prec=prec)

    def is_zero(self, x: LaurentSeries) -> bool:
        return x.is_exact_zero()

    # -- ring operations ---------------------------------------------------------

    def add(self, a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
        if not a.coeffs and a.prec is None:
            return b
        if not b.coeffs and b.prec is None:
            return a
        prec = _min_prec(a.prec, b.prec)
        if not a.coeffs and not b.coeffs:
            return self.zero_to(prec) if prec is not None else self.zero
        leads = [x.lead for x in (a, b) if x.coeffs]
        lead = min(leads)
        ends = [x.lead + len(x.coeffs) for x in (a, b) if x.coeffs]
        end = max(ends)
        if prec is not None:
            end = min(end, prec)
        field = self.field
        out = [0] * max(0, end - lead)
        for x in (a, b):
            for i, c in enumerate(x.coeffs):
                j = x.lead + i - lead
                if 0 <= j < len(out):
                    out[j] = field.add(out[j], c)
        return self.make(lead, out, prec)

    def neg(self, a: LaurentSeries) -> LaurentSeries:
        field = self.field
        return LaurentSeries(self, a.lead, tuple(field.neg(c) for c in a.coeffs),
                             a.prec)

    def sub(self, a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
        return self.add(a, self.neg(b))

    def scalar_mul(self, c: int, a: LaurentSeries) -> LaurentSeries:
        if c == 0:
            # scalar zero is exact, but the precision window survives only
            # as knowledge that the result is exactly zero
            return self.zero
        field = self.field
        return LaurentSeries(self, a.lead,
                             tuple(field.mul(c, x) for x in a.coeffs), a.prec)

    def mul(self, a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
        if a.is_exact_zero() or b.is_exact_zero():
            return self.zero
        prec = _min_prec(_add_prec(a.prec, b.val_lower_bound()),
                         _add_prec(b.prec, a.val_lower_bound()))
        if not a.coeffs or not b.coeffs:
            return self.zero_to(prec) if prec is not None else self.zero
        if self._np:
            out = self._np_mul(a.coeffs, b.coeffs)
        else:
            field = self.field
            out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
            for i, ai in enumerate(a.coeffs):
                if ai:
                    for j, bj in enumerate(b.coeffs):
                        if bj:
                            out[i + j] = field.add(out[i + j], field.mul(ai, bj))
        return self.make(a.lead + b.lead, out, prec)

    def _np_mul(self, ac, bc):
        """Coefficient convolution mod p; one nearly-empty factor (as the
        Frobenius-rescaled one-units are) takes a sparse accumulation path."""
        p = self.field.p
        nza = [(i, c) for i, c in enumerate(ac) if c]
        nzb = [(i, c) for i, c in enumerate(bc) if c]
        if len(nzb) < len(nza):
            ac, bc = bc, ac
            nza = nzb
        if len(nza) <= 24 and len(ac) + len(bc) > 256:
            arr = np.zeros(len(ac) + len(bc) - 1, dtype=np.int64)
            dense = np.asarray(bc, dtype=np.int64)
            for i, c in nza:
                arr[i:i + len(dense)] += c * dense
            return (arr % p).tolist()
        arr = np.convolve(np.asarray(ac, dtype=np.int64),
                          np.asarray(bc, dtype=np.int64)) % p
        return arr.tolist()

    def inv(self, a: LaurentSeries, prec=None) -> LaurentSeries:
        if not a.coeffs:
            raise ZeroDecompositionError("cannot invert a (known-)zero value")
        field = self.field
        v = a.lead
        if len(a.coeffs) == 1 and a.prec is None:
            return self.monomial(field.inv(a.coeffs[0]), -v)
        rel = None if a.prec is None else a.prec - v
        if prec is not None:
            want = prec + v
            rel = want if rel is None else min(rel, want)
        if rel is None:
            raise PrecisionError("inverting an exact non-monomial needs a "
                                 "target precision")
        if rel <= 0:
            raise PrecisionError("no relative precision available for inversion")
        c0 = a.coeffs[0]
        c0_inv = field.inv(c0)
        u = [field.mul(c0_inv, c) for c in a.coeffs[:rel]]
        u += [0] * (rel - len(u))
        rec = [0] * rel
        rec[0] = 1
        for k in range(1, rel):
            acc = 0
            for j in range(1, k + 1):
                if u[j] and rec[k - j]:
                    acc = field.add(acc, field.mul(u[j], rec[k - j]))
            rec[k] = field.neg(acc)
        out = [field.mul(c0_inv, c) for c in rec]
        return self.make(-v, out, -v + rel)

    def div(self, a: LaurentSeries, b: LaurentSeries, prec=None) -> LaurentSeries:
        inv_prec = None
        if prec is not None and a.coeffs:
            # give the inverse enough relative precision for the product
            inv_prec = prec - a.lead
        elif prec is not None:
            inv_prec = prec
        return self.mul(a, self.inv(b, prec=inv_prec))

    def pow(self, a: LaurentSeries, n: int, prec=None) -> LaurentSeries:
        if n < 0:
            return self.pow(self.inv(a, prec=prec), -n)
        out = self.one
        b = a
        while n:
            if n & 1:
                out = self.mul(out, b)
            b = self.mul(b, b)
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, LaurentRing) and other.field == self.field
                and other.var == self.var)

    def __hash__(self):
        return hash(("LaurentRing", self.field, self.var))

    def __repr__(self):
        return f"LaurentRing({self.field!r}, {self.var})"


# ---------------------------------------------------------------------------
# sign decomposition and one-unit powers


def frobenius_power(x: LaurentSeries) -> LaurentSeries:
    """x^q, exactly, by rescaling exponents (coefficients are q-power fixed).

    In characteristic p the q-th power map is additive, so a series over
    F_q satisfies (sum c_e u^e)^q = sum c_e u^(qe), and a tail of
    valuation >= P contributes only above qP; both the coefficients and
    the precision window just rescale.
    """
    ring = x.ring
    q = ring.field.q
    prec = None if x.prec is None else x.prec * q
    if not x.coeffs:
        return x if x.prec is None else ring.zero_to(prec)
    out = [0] * ((len(x.coeffs) - 1) * q + 1)
    for i, c in enumerate(x.coeffs):
        if c:
            out[i * q] = c
    return ring.make(x.lead * q, out, prec)


def decompose(x: LaurentSeries) -> tuple[int, int, LaurentSeries]:
    """Split a nonzero x as  sgn * u^(-deg) * one_unit,  one_unit = 1 + O(u).

    Returns (deg, sgn, one_unit).  For a monic polynomial of degree d
    embedded at infinity this gives (d, 1, <x>).
    """
    if not x.coeffs:
        raise ZeroDecompositionError("cannot decompose zero")
    ring = x.ring
    field = ring.field
    e = x.lead
    sgn = x.coeffs[0]
    unit = ring.scalar_mul(field.inv(sgn), x.shift(-e))
    return -e, sgn, unit


def recompose(ring: LaurentRing, deg: int, sgn: int, unit: LaurentSeries) -> LaurentSeries:
    return ring.scalar_mul(sgn, unit.shift(-deg))


def one_unit_power(u: LaurentSeries, y, prec=None) -> LaurentSeries:
    """u^y for a one-unit u (u = 1 + O(uniformizer)) and y a digit stream.

    The digit product prod_j (u^(q^j))^(c_j) is truncated at precision
    ``prec``: digits at positions J with w*q^J >= prec contribute 1 there
    (w = valuation of u - 1).  For a nonnegative integer y and prec=None
    the exact ordinary power is returned (u must be exact).
    """
    ring = u.ring
    field = ring.field
    q = field.q
    if u.is_known_zero() or u.lead != 0 or u.coeffs[0] != 1:
        raise NotOneUnitError("base of a one-unit power must be == 1 mod uniformizer")
    y = as_padic(y, q)
    if y.is_zero():
        return ring.one        # the empty digit product, exactly
    w_series = ring.sub(u, ring.one)
    if w_series.is_exact_zero():
        # u == 1 exactly
        return ring.one if prec is None else ring.one.truncate(prec)
    w = w_series.val_lower_bound()
    if w is not None and w < 1:
        raise NotOneUnitError("one-unit must be congruent to 1")
    if prec is None:
        if y.tail == 0 and u.prec is None:
            out = ring.one
            base = u
            for j in range(len(y.head)):
                c = y.digit(j)
                if c:
                    out = ring.mul(out, ring.pow(base, c))
                base = frobenius_power(base)
            return out
        raise PrecisionError("one-unit power of a general stream needs a "
                             "target precision")
    if prec > (u.prec if u.prec is not None else prec):
        raise PrecisionError("requested precision exceeds precision of the base")
    out = ring.one.truncate(prec)
    base = u.truncate(prec)
    j = 0
    step = w if w is not None else prec  # w None cannot happen here
    while step * (q ** j) < prec:
        c = y.digit(j)
        if c:
            out = ring.mul(out, ring.pow(base, c)).truncate(prec)
        base = frobenius_power(base).truncate(prec)
        j += 1
    return out
