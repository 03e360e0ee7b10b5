"""Divided-power series, moment sequences, and the transform between them.

A measure on the (theta)-adic integers is determined by its moment
sequence mu_j = integral of G_j; the transform sends that sequence to the
divided power series sum mu_j u^j/j!, which multiplies by

    (u^i/i!) (u^j/j!) = binom(i+j, i) u^(i+j)/(i+j)!   (binomial mod p)

turning convolution of measures into multiplication.  Coefficients can
live in any ring of the package (exact A or k for Dirac combinations,
theta-adic series for general bounded measures); operations are generic
over the ring and exact at the chosen truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import CarlitzContext
from .errors import CarlitzDomainError
from .expansion import WagnerExpansion
from .polys import Poly, binom_mod


@dataclass(frozen=True)
class DividedPowerSeries:
    ring: object
    coeffs: tuple          # d_0 .. d_{order-1}

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)


def dp_series(ring, coeffs, order: int | None = None) -> DividedPowerSeries:
    coeffs = list(coeffs)
    if order is not None:
        coeffs = coeffs[:order] + [ring.zero] * (order - len(coeffs))
    return DividedPowerSeries(ring, tuple(coeffs))


def dp_one(ring, order: int) -> DividedPowerSeries:
    return dp_series(ring, [ring.one], order)


def dp_generator(ring, i: int, order: int) -> DividedPowerSeries:
    """The element u^i/i! as a series of the given truncation order."""
    if i >= order:
        raise CarlitzDomainError("generator index outside the truncation order")
    coeffs = [ring.zero] * order
    coeffs[i] = ring.one
    return DividedPowerSeries(ring, tuple(coeffs))


def dp_add(a: DividedPowerSeries, b: DividedPowerSeries) -> DividedPowerSeries:
    ring = a.ring
    n = min(a.order, b.order)
    return DividedPowerSeries(ring, tuple(
        ring.add(x, y) for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def dp_mul(a: DividedPowerSeries, b: DividedPowerSeries) -> DividedPowerSeries:
    ring = a.ring
    p = ring.char
    n = min(a.order, b.order)
    out = [ring.zero] * n
    for i, ai in enumerate(a.coeffs[:n]):
        if ring.is_zero(ai):
            continue
        for j, bj in enumerate(b.coeffs[:n - i]):
            if ring.is_zero(bj):
                continue
            bc = binom_mod(i + j, i, p)
            if bc:
                term = ring.mul(ai, bj)
                if bc != 1:
                    term = ring.mul(ring.from_int(bc), term)
                out[i + j] = ring.add(out[i + j], term)
    return DividedPowerSeries(ring, tuple(out))


def dp_eq(a: DividedPowerSeries, b: DividedPowerSeries) -> bool:
    ring = a.ring
    n = min(a.order, b.order)
    return all(ring.is_zero(ring.sub(x, y))
               for x, y in zip(a.coeffs[:n], b.coeffs[:n]))


# ---------------------------------------------------------------------------
# measures as moment sequences


@dataclass(frozen=True)
class MeasureMoments:
    ring: object
    moments: tuple

    @property
    def order(self) -> int:
        return len(self.moments)


@dataclass(frozen=True)
class DiracCombination:
    """A finite sum of point masses sum_i c_i * delta_{alpha_i}."""

    pairs: tuple           # ((coeff, point APoly), ...)


def dirac(ctx: CarlitzContext, point: Poly, coeff: Poly | None = None) -> DiracCombination:
    c = coeff if coeff is not None else ctx.A.one
    return DiracCombination(((c, point),))


def dirac_moments(ctx: CarlitzContext, combo: DiracCombination,
                  order: int) -> MeasureMoments:
    """Moment sequence: the j-th moment is sum_i c_i G_j(alpha_i)."""
    A = ctx.A
    moments = [A.zero] * order
    for c, point in combo.pairs:
        vals = ctx.family_values("G", order, point)
        for j in range(order):
            moments[j] = A.add(moments[j], A.mul(c, vals[j]))
    return MeasureMoments(A, tuple(moments))


def wagner_transform(mu: MeasureMoments) -> DividedPowerSeries:
    """Moments to divided-power coefficients (an algebra isomorphism)."""
    return DividedPowerSeries(mu.ring, mu.moments)


def inverse_wagner_transform(h: DividedPowerSeries) -> MeasureMoments:
    return MeasureMoments(h.ring, h.coeffs)


def convolve(mu: MeasureMoments, nu: MeasureMoments) -> MeasureMoments:
    """Convolution through the addition formula of the normalized family:

    (mu * nu)_j = sum_{v+w=j} binom(j, v) mu_v nu_w.
    """
    ring = mu.ring
    p = ring.char
    n = min(mu.order, nu.order)
    out = [ring.zero] * n
    for v in range(n):
        if ring.is_zero(mu.moments[v]):
            continue
        for w in range(n - v):
            if ring.is_zero(nu.moments[w]):
                continue
            bc = binom_mod(v + w, v, p)
            if bc:
                term = ring.mul(mu.moments[v], nu.moments[w])
                if bc != 1:
                    term = ring.mul(ring.from_int(bc), term)
                out[v + w] = ring.add(out[v + w], term)
    return MeasureMoments(ring, tuple(out))


def convolve_function(mu: MeasureMoments, f: WagnerExpansion) -> WagnerExpansion:
    """The function x -> integral of f(x + y) d mu(y), on coefficient streams.

    For f = sum a_i G_i the output coefficients are
    b_v = sum_w binom(v + w, v) a_{v+w} mu_w.
    """
    ring = f.ring
    p = ring.char
    n = len(f.coeffs)
    out = [ring.zero] * n
    for v in range(n):
        acc = ring.zero
        for w in range(min(mu.order, n - v)):
            mw = mu.moments[w]
            if ring.is_zero(mw):
                continue
            bc = binom_mod(v + w, v, p)
            if bc:
                term = ring.mul(f.coeffs[v + w], mw)
                if bc != 1:
                    term = ring.mul(ring.from_int(bc), term)
                acc = ring.add(acc, term)
        out[v] = acc
    return WagnerExpansion(ring, tuple(out), precision=f.precision,
                           attenuated=f.attenuated and mu.order >= n)


# ---------------------------------------------------------------------------
# the coefficient retagging G_i -> z^i and divided derivatives in z


@dataclass(frozen=True)
class TatePolynomial:
    ring: object
    coeffs: tuple

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)


def hat_transform(f: WagnerExpansion) -> TatePolynomial:
    """Retag sum a_i G_i(x) as the z-polynomial sum a_i z^i."""
    return TatePolynomial(f.ring, f.coeffs)


def inverse_hat_transform(g: TatePolynomial) -> WagnerExpansion:
    return WagnerExpansion(g.ring, g.coeffs)


def divided_derivative_z(g: TatePolynomial, i: int) -> TatePolynomial:
    """The action z^n -> binom(n, i) z^(n-i), binomial mod p."""
    ring = g.ring
    p = ring.char
    out = []
    for n in range(i, len(g.coeffs)):
        bc = binom_mod(n, i, p)
        c = g.coeffs[n]
        if bc == 0:
            out.append(ring.zero)
        elif bc == 1:
            out.append(c)
        else:
            out.append(ring.mul(ring.from_int(bc), c))
    out += [ring.zero] * min(i, len(g.coeffs))
    return TatePolynomial(ring, tuple(out))


def tate_eq(a: TatePolynomial, b: TatePolynomial) -> bool:
    ring = a.ring
    n = min(len(a.coeffs), len(b.coeffs))
    return all(ring.is_zero(ring.sub(x, y))
               for x, y in zip(a.coeffs[:n], b.coeffs[:n]))
