"""Polynomial rings over a coefficient ring, and the fraction field k.

``PolyRing(base, var)`` works over any ring object exposing the small
arithmetic interface used throughout this package (``zero``, ``one``,
``add``, ``sub``, ``mul``, ``neg``, ``from_int``, ``is_zero``).  The ring
A = F_q[theta] is ``PolyRing(field, "theta")``; the polynomial families in
x live in ``PolyRing(A, "x")`` or ``PolyRing(FracField(A), "x")``.

Polynomials store an ascending coefficient tuple with no trailing zeros;
the zero polynomial has the empty tuple (degree -1 convention).  For prime
base fields multiplication runs through numpy integer convolution, which
is exact (coefficients stay far below 2^63) and fast enough for the test
scales; everything else uses schoolbook arithmetic.
"""

from __future__ import annotations

import numpy as np

from .errors import (CarlitzDomainError, EnumerationTooLargeError)
from .fields import FqField

ENUMERATION_LIMIT = 10 ** 7


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs  # trimmed ascending tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        if not self.coeffs:
            return False
        base = self.ring.base
        lc = self.coeffs[-1]
        if isinstance(base, FqField):
            return lc == 1
        one = base.one
        return _elem_eq(base, lc, one)

    def lead(self):
        if not self.coeffs:
            raise CarlitzDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.base.zero

    # operator sugar; the ring methods do the work
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

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"{self.ring.var}-poly{self.coeffs}"

    def map_coeffs(self, fn, ring=None):
        ring = ring or self.ring
        return ring.poly([fn(c) for c in self.coeffs])

    def __call__(self, point, coeff_map=None):
        """Horner evaluation at ``point`` (element of any compatible ring).

        ``coeff_map`` lifts each coefficient into the point's ring; by
        default coefficients must already be usable there.
        """
        return poly_eval(self, point, coeff_map)


def _elem_eq(base, a, b):
    if isinstance(base, FqField):
        return a == b
    return base.is_zero(base.sub(a, b))


class PolyRing:
    def __init__(self, base, var: str = "x"):
        self.base = base
        self.var = var
        # characteristic, where the base knows one
        self.char = getattr(base, "char", None)
        self._np = isinstance(base, FqField) and base.is_prime_field

    # -- constructors ------------------------------------------------------

    def poly(self, coeffs) -> Poly:
        base = self.base
        coeffs = list(coeffs)
        i = len(coeffs)
        while i > 0 and base.is_zero(coeffs[i - 1]):
            i -= 1
        return Poly(self, tuple(coeffs[:i]))

    @property
    def zero(self) -> Poly:
        return Poly(self, ())

    @property
    def one(self) -> Poly:
        return Poly(self, (self.base.one,))

    def gen(self) -> Poly:
        return Poly(self, (self.base.zero, self.base.one))

    def from_int(self, n: int) -> Poly:
        c = self.base.from_int(n)
        return Poly(self, (c,)) if not self.base.is_zero(c) else Poly(self, ())

    def constant(self, c) -> Poly:
        return self.poly([c])

    def monomial(self, c, d: int) -> Poly:
        return self.poly([self.base.zero] * d + [c])

    def is_zero(self, f: Poly) -> bool:
        return not f.coeffs

    # -- ring operations ----------------------------------------------------

    def add(self, f: Poly, g: Poly) -> Poly:
        a, b = f.coeffs, g.coeffs
        if len(a) < len(b):
            a, b = b, a
        base = self.base
        out = list(a)
        for i, c in enumerate(b):
            out[i] = base.add(out[i], c)
        return self.poly(out)

    def neg(self, f: Poly) -> Poly:
        base = self.base
        return Poly(self, tuple(base.neg(c) for c in f.coeffs))

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    def mul(self, f: Poly, g: Poly) -> Poly:
        a, b = f.coeffs, g.coeffs
        if not a or not b:
            return Poly(self, ())
        if self._np:
            p = self.base.p
            arr = np.convolve(np.asarray(a, dtype=np.int64),
                              np.asarray(b, dtype=np.int64)) % p
            out = arr.tolist()
            return self.poly(out)
        base = self.base
        out = [base.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if base.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = base.add(out[i + j], base.mul(ai, bj))
        return self.poly(out)

    def scalar_mul(self, c, f: Poly) -> Poly:
        base = self.base
        if base.is_zero(c):
            return Poly(self, ())
        return self.poly([base.mul(c, a) for a in f.coeffs])

    def scalar(self, n: int, f: Poly) -> Poly:
        """n-fold sum of f (integer scalar through the prime subfield)."""
        return self.scalar_mul(self.base.from_int(n), f)

    def pow(self, f: Poly, n: int) -> Poly:
        if n < 0:
            raise CarlitzDomainError("negative polynomial power")
        out = self.one
        b = f
        while n:
            if n & 1:
                out = self.mul(out, b)
            b = self.mul(b, b)
            n >>= 1
        return out

    def divmod(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        """Long division; the leading coefficient of g must be invertible."""
        if g.is_zero():
            raise CarlitzDomainError("polynomial division by zero")
        base = self.base
        if self._np and len(f.coeffs) > len(g.coeffs) > 1:
            return self._divmod_np(f, g)
        lc = g.coeffs[-1]
        monic = _elem_eq(base, lc, base.one)
        inv_lc = None if monic else base.inv(lc)
        r = list(f.coeffs)
        dg = g.degree
        q = [base.zero] * max(0, len(r) - dg)
        while len(r) - 1 >= dg:
            top = r[-1]
            if not base.is_zero(top):
                factor = top if monic else base.mul(top, inv_lc)
                shift = len(r) - 1 - dg
                q[shift] = factor
                for j, cj in enumerate(g.coeffs):
                    r[shift + j] = base.sub(r[shift + j], base.mul(factor, cj))
            r.pop()
        return self.poly(q), self.poly(r)

    def _divmod_np(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        p = self.base.p
        inv_lc = pow(g.coeffs[-1], p - 2, p)
        r = np.asarray(f.coeffs, dtype=np.int64).copy()
        gv = np.asarray(g.coeffs, dtype=np.int64)
        dg = len(gv) - 1
        q = np.zeros(len(r) - dg, dtype=np.int64)
        for top in range(len(r) - 1, dg - 1, -1):
            c = r[top] % p
            if c:
                factor = (c * inv_lc) % p
                shift = top - dg
                q[shift] = factor
                r[shift:top + 1] = (r[shift:top + 1] - factor * gv) % p
        return self.poly(q.tolist()), self.poly((r[:dg] % p).tolist())

    def exact_div(self, f: Poly, g: Poly) -> Poly:
        """Exact quotient f/g in an integral domain; raises if not divisible.

        Works with non-invertible leading coefficients: if g | f, every
        division step of long division is itself exact.
        """
        if g.is_zero():
            raise CarlitzDomainError("polynomial division by zero")
        base = self.base
        if isinstance(base, FqField):
            q, r = self.divmod(f, g)
            if not r.is_zero():
                raise CarlitzDomainError("inexact polynomial division")
            return q
        r = list(f.coeffs)
        dg = g.degree
        lc = g.coeffs[-1]
        q = [base.zero] * max(0, len(r) - dg)
        while len(r) - 1 >= dg:
            top = r[-1]
            if not base.is_zero(top):
                factor = base.exact_div(top, lc)
                shift = len(r) - 1 - dg
                q[shift] = factor
                for j, cj in enumerate(g.coeffs):
                    r[shift + j] = base.sub(r[shift + j], base.mul(factor, cj))
            r.pop()
        rem = self.poly(r)
        if not rem.is_zero():
            raise CarlitzDomainError("inexact polynomial division")
        return self.poly(q)

    def gcd(self, f: Poly, g: Poly) -> Poly:
        """Monic gcd; base must be a field."""
        base = self.base
        a, b = f, g
        while not b.is_zero():
            a, b = b, self.divmod(a, b)[1]
        if a.is_zero():
            return a
        return self.scalar_mul(base.inv(a.coeffs[-1]), a)

    def lcm(self, f: Poly, g: Poly) -> Poly:
        if f.is_zero() or g.is_zero():
            return self.zero
        d = self.gcd(f, g)
        out = self.exact_div(self.mul(f, g), d)
        return self.scalar_mul(self.base.inv(out.coeffs[-1]), out)

    def make_monic(self, f: Poly) -> Poly:
        if f.is_zero():
            return f
        return self.scalar_mul(self.base.inv(f.coeffs[-1]), f)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.base == self.base
                and other.var == self.var)

    def __hash__(self):
        return hash(("PolyRing", self.base, self.var))

    def __repr__(self):
        return f"PolyRing({self.base!r}, {self.var})"


def poly_eval(f: Poly, point, coeff_map=None):
    """Evaluate f at a point by Horner.

    The point must be an operator-carrying element (Poly, RatFunc,
    LaurentSeries); for raw integer-encoded field elements use ``eval_in``.
    ``coeff_map`` lifts coefficients into the point's ring (identity by
    default).
    """
    if coeff_map is None:
        if f.coeffs and isinstance(f.coeffs[-1], int):
            # integer-encoded field coefficients need lifting into the
            # point's ring before operator arithmetic applies
            ring = getattr(point, "ring", None)
            if ring is not None and hasattr(ring, "constant"):
                coeff_map = ring.constant
            elif ring is not None and hasattr(ring, "from_field"):
                coeff_map = ring.from_field
        if coeff_map is None:
            coeff_map = lambda c: c
    if not f.coeffs:
        return point - point
    it = reversed(f.coeffs)
    acc = coeff_map(next(it))
    for c in it:
        acc = acc * point + coeff_map(c)
    return acc


def eval_in(ring, f: Poly, point, coeff_map):
    """Horner evaluation with an explicit target ring (handles f = 0)."""
    acc = ring.zero
    for c in reversed(f.coeffs):
        acc = ring.add(ring.mul(acc, point), coeff_map(c))
    return acc


# ---------------------------------------------------------------------------
# enumeration of A = F_q[theta]


def enumerate_monic(ring: PolyRing, d: int):
    """All monic polynomials of degree d, ascending base-q counter order."""
    q = ring.base.q
    if q ** d > ENUMERATION_LIMIT:
        raise EnumerationTooLargeError(f"q^d = {q**d} exceeds enumeration guard")
    for idx in range(q ** d):
        coeffs = []
        n = idx
        for _ in range(d):
            coeffs.append(n % q)
            n //= q
        coeffs.append(1)
        yield Poly(ring, tuple(coeffs))


def enumerate_below(ring: PolyRing, d: int):
    """All q^d polynomials of degree < d (zero included), counter order."""
    q = ring.base.q
    if q ** d > ENUMERATION_LIMIT:
        raise EnumerationTooLargeError(f"q^d = {q**d} exceeds enumeration guard")
    for idx in range(q ** d):
        coeffs = []
        n = idx
        for _ in range(d):
            coeffs.append(n % q)
            n //= q
        yield ring.poly(coeffs)


# ---------------------------------------------------------------------------
# divided derivatives in theta


def divided_derivative(f: Poly, j: int) -> Poly:
    """The j-th divided derivative: theta^i -> binom(i, j) theta^(i-j) mod p."""
    if j < 0:
        raise CarlitzDomainError("derivative order must be >= 0")
    ring = f.ring
    base = ring.base
    p = base.p
    if j == 0:
        return f
    out = []
    for i in range(j, f.degree + 1):
        b = binom_mod(i, j, p)
        out.append(base.scalar(b, f.coeffs[i]))
    return ring.poly(out)


class DividedDerivativeTable:
    """All divided derivatives of one polynomial, with the Taylor check."""

    def __init__(self, f: Poly):
        self.source = f
        self.rows = tuple(divided_derivative(f, j) for j in range(f.degree + 1))

    def __getitem__(self, j: int) -> Poly:
        if j <= self.source.degree:
            return self.rows[j]
        return self.source.ring.zero

    def taylor_check(self, x0: Poly) -> bool:
        """f(x0) == sum_j d_j f(theta) (x0 - theta)^j, exactly in A."""
        ring = self.source.ring
        theta = ring.gen()
        shift = x0 - theta
        acc = ring.zero
        power = ring.one
        for row in self.rows:
            acc = acc + row * power
            power = power * shift
        return acc == self.source(x0)


def binom_mod(n: int, k: int, p: int) -> int:
    """binom(n, k) mod p by Lucas' digit decomposition."""
    if k < 0 or k > n:
        return 0
    out = 1
    while k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        if ki:
            num = 1
            den = 1
            for t in range(ki):
                num = (num * (ni - t)) % p
                den = (den * (t + 1)) % p
            out = (out * num * pow(den, p - 2, p)) % p
        n //= p
        k //= p
    return out


def multinomial_mod(n: int, parts: tuple[int, ...], p: int) -> int:
    """n! / prod(parts!) mod p, via a chain of Lucas binomials."""
    if min(parts) < 0 or sum(parts) != n:
        return 0
    out = 1
    rest = n
    for part in parts[:-1]:
        out = (out * binom_mod(rest, part, p)) % p
        if out == 0:
            return 0
        rest -= part
    return out


# ---------------------------------------------------------------------------
# the fraction field k = F_q(theta)


class RatFunc:
    """Reduced fraction num/den of A-polynomials, den monic."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: Poly, den: Poly):
        self.field = field
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_integral():
            raise CarlitzDomainError("fraction is not a polynomial")
        return self.num

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def __truediv__(self, other):
        return self.field.div(self, other)

    def __pow__(self, n):
        return self.field.pow(self, n)

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and other.field == self.field
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"


class FracField:
    """k = Frac(A), with gcd-reduced monic-denominator canonical form."""

    def __init__(self, poly_ring: PolyRing):
        self.ring = poly_ring
        self.char = poly_ring.char

    def make(self, num: Poly, den: Poly | None = None) -> RatFunc:
        A = self.ring
        if den is None:
            den = A.one
        if den.is_zero():
            raise CarlitzDomainError("zero denominator")
        if num.is_zero():
            return RatFunc(self, A.zero, A.one)
        g = A.gcd(num, den)
        if g.degree > 0:
            num = A.exact_div(num, g)
            den = A.exact_div(den, g)
        lc = den.coeffs[-1]
        if lc != A.base.one:
            inv = A.base.inv(lc)
            num = A.scalar_mul(inv, num)
            den = A.scalar_mul(inv, den)
        return RatFunc(self, num, den)

    def from_poly(self, f: Poly) -> RatFunc:
        return RatFunc(self, f, self.ring.one)

    def from_int(self, n: int) -> RatFunc:
        return self.from_poly(self.ring.from_int(n))

    @property
    def zero(self) -> RatFunc:
        return RatFunc(self, self.ring.zero, self.ring.one)

    @property
    def one(self) -> RatFunc:
        return RatFunc(self, self.ring.one, self.ring.one)

    def is_zero(self, a: RatFunc) -> bool:
        return a.num.is_zero()

    def add(self, a: RatFunc, b: RatFunc) -> RatFunc:
        A = self.ring
        return self.make(A.add(A.mul(a.num, b.den), A.mul(b.num, a.den)),
                         A.mul(a.den, b.den))

    def neg(self, a: RatFunc) -> RatFunc:
        return RatFunc(self, self.ring.neg(a.num), a.den)

    def sub(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.add(a, self.neg(b))

    def mul(self, a: RatFunc, b: RatFunc) -> RatFunc:
        A = self.ring
        return self.make(A.mul(a.num, b.num), A.mul(a.den, b.den))

    def inv(self, a: RatFunc) -> RatFunc:
        if a.num.is_zero():
            raise CarlitzDomainError("division by zero in k")
        return self.make(a.den, a.num)

    def div(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.mul(a, self.inv(b))

    exact_div = div

    def pow(self, a: RatFunc, n: int) -> RatFunc:
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.one
        b = a
        while n:
            if n & 1:
                out = self.mul(out, b)
            b = self.mul(b, b)
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, FracField) and other.ring == self.ring

    def __hash__(self):
        return hash(("FracField", self.ring))

    def __repr__(self):
        return f"FracField({self.ring!r})"


def clear_denominators(f: Poly) -> tuple[Poly, Poly]:
    """For f over k, return (F over A, den in A) with f = F / den."""
    kx = f.ring
    k = kx.base
    if isinstance(k, PolyRing):  # already over A
        return f, k.one
    A = k.ring
    den = A.one
    for c in f.coeffs:
        den = A.lcm(den, c.den)
    if den.is_zero():
        den = A.one
    Ax = PolyRing(A, kx.var)
    coeffs = []
    for c in f.coeffs:
        coeffs.append(A.mul(c.num, A.exact_div(den, c.den)))
    return Ax.poly(coeffs), den


def lift_to_frac(f: Poly, fracfield: FracField, var: str = "x") -> Poly:
    """Lift a polynomial over A (in ``var``) to the same polynomial over k."""
    kx = PolyRing(fracfield, var)
    return kx.poly([fracfield.from_poly(c) for c in f.coeffs])
