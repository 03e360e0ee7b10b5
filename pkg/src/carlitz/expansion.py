"""Expansion of polynomials in the Carlitz bases, and the digit-basis test.

A polynomial f over k of degree d < q^m expands uniquely in each of the
four families; the coefficients are finite sums over either all
polynomials of degree < m or all monics of degree m:

    a_{f,i}    = (-1)^m (L_m/D_m) sum f(alpha) ghat_{q^m-1-i}(alpha)
    ahat_{f,i} = (-1)^m (L_m/D_m) sum f(alpha) g_{q^m-1-i}(alpha)
    A_{f,i}    = (-1)^m  sum f(alpha) Ghat_{q^m-1-i}(alpha)
    Ahat_{f,i} = (-1)^m  sum f(alpha) G_{q^m-1-i}(alpha)

with Pi(i) a_{f,i} = A_{f,i} linking the normalized and plain families.
The normalized coefficient A_{f,i} is level-stable: computing it at the
minimal level e+1 (e the top base-q digit position of i) gives the same
value as any admissible level, which is what the continuous theory uses.

All sums are evaluated exactly in k; only ``wagner_coefficients`` embeds
the results into the (theta)-adic completion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import CarlitzContext, base_q_digits
from .errors import (CarlitzDomainError, CarlitzGuardError, LevelTooSmallError)
from .linalg import gauss_invert
from .polys import Poly, RatFunc, clear_denominators, poly_eval

BASES = ("g", "ghat", "G", "Ghat")
_DUAL = {"g": "ghat", "ghat": "g", "G": "Ghat", "Ghat": "G"}

DIGIT_BASIS_LIMIT = 2 ** 16


@dataclass(frozen=True)
class ExpansionCoefficients:
    basis: str
    coeffs: tuple          # RatFunc entries, length source_degree + 1
    source_degree: int
    level: int


@dataclass(frozen=True)
class DigitBasisLevel:
    level: int
    matrix: tuple          # q^n x q^n evaluation matrix over F_q
    invertible: bool


@dataclass(frozen=True)
class WagnerExpansion:
    """Coefficient sequence of a function in the normalized basis.

    ``ring`` is any coefficient ring (exact A/k for polynomial work, or a
    theta-adic Laurent ring); ``attenuated`` records whether vanishing
    beyond the stored window is a constructed guarantee.
    """

    ring: object
    coeffs: tuple
    precision: int | None = None
    attenuated: bool = True


def _normalize_input(ctx: CarlitzContext, f: Poly) -> tuple[Poly, Poly]:
    """Return (F over A in x, den in A) with f = F/den."""
    if f.ring == ctx.Ax:
        return f, ctx.A.one
    if f.ring == ctx.kx:
        return clear_denominators(f)
    raise CarlitzDomainError("polynomial must live over A[x] or k[x]")


def _coefficient_sums(ctx, F, basis, m, points):
    """The common core: S_i = sum f(alpha) dual_{q^m-1-i}(alpha), in A."""
    A = ctx.A
    dual = _DUAL[basis]
    count = ctx.q ** m
    sums = [A.zero] * (F.degree + 1)
    for alpha in points:
        fval = poly_eval(F, alpha) if F.coeffs else A.zero
        if fval.is_zero():
            continue
        dvals = ctx.family_values(dual, count, alpha)
        for i in range(F.degree + 1):
            sums[i] = A.add(sums[i], A.mul(fval, dvals[count - 1 - i]))
    return sums


def _pack_coefficients(ctx, sums, den, basis, m):
    A, k = ctx.A, ctx.k
    sign = A.one if m % 2 == 0 else A.neg(A.one)
    if basis in ("g", "ghat"):
        denom = A.mul(den, ctx.DL_ratio(m))
    else:
        denom = den
    return tuple(k.make(A.mul(sign, s), denom) for s in sums)


def expand(ctx: CarlitzContext, f: Poly, basis: str, m: int) -> ExpansionCoefficients:
    """Expansion coefficients of f in the chosen basis, summing over A_{<m}."""
    if basis not in BASES:
        raise CarlitzDomainError(f"unknown basis {basis!r}")
    F, den = _normalize_input(ctx, f)
    d = max(F.degree, 0)
    if ctx.q ** m <= d:
        raise LevelTooSmallError(f"need q^m > deg f = {d}")
    sums = _coefficient_sums(ctx, F, basis, m, ctx.below(m))
    return ExpansionCoefficients(basis, _pack_coefficients(ctx, sums, den, basis, m),
                                 F.degree, m)


def expand_monic(ctx: CarlitzContext, f: Poly, basis: str, m: int) -> ExpansionCoefficients:
    """Same coefficients as ``expand``, summing over the monics A_{m,+}."""
    if basis not in BASES:
        raise CarlitzDomainError(f"unknown basis {basis!r}")
    F, den = _normalize_input(ctx, f)
    d = max(F.degree, 0)
    if ctx.q ** m <= d:
        raise LevelTooSmallError(f"need q^m > deg f = {d}")
    sums = _coefficient_sums(ctx, F, basis, m, ctx.monics(m))
    return ExpansionCoefficients(basis, _pack_coefficients(ctx, sums, den, basis, m),
                                 F.degree, m)


def reconstruct(ctx: CarlitzContext, ec: ExpansionCoefficients) -> Poly:
    """sum coeff_i basis_i(x) as a polynomial over k (reduced once).

    Normalized-family terms are rewritten through the plain family,
    coeff_i G_i = (coeff_i / Pi(i)) g_i, so the whole sum clears to a single
    common denominator and needs one reduction per output coefficient.
    """
    A, k, Ax, kx = ctx.A, ctx.k, ctx.Ax, ctx.kx
    normalized = ec.basis in ("G", "Ghat")
    plain = "g" if ec.basis in ("g", "G") else "ghat"
    dens = []
    for i, c in enumerate(ec.coeffs):
        if c.is_zero():
            dens.append(None)
            continue
        dens.append(A.mul(c.den, ctx.carlitz_factorial(i)) if normalized else c.den)
    C = A.one
    for d in dens:
        if d is not None:
            C = A.lcm(C, d)
    acc = Ax.zero
    for i, c in enumerate(ec.coeffs):
        if c.is_zero():
            continue
        num = A.mul(c.num, A.exact_div(C, dens[i]))
        acc = Ax.add(acc, Ax.scalar_mul(num, ctx.carlitz_poly(plain, i).poly))
    return kx.poly([k.make(coeff, C) for coeff in acc.coeffs])


def reconstruct_matches(ctx: CarlitzContext, ec: ExpansionCoefficients, f: Poly) -> bool:
    """Exact check sum coeff_i basis_i == f without any gcd reduction."""
    A, Ax = ctx.A, ctx.Ax
    F, den = _normalize_input(ctx, f)
    C = A.mul(den, ctx.DL_ratio(ec.level))
    normalized = ec.basis in ("G", "Ghat")
    plain = "g" if ec.basis in ("g", "G") else "ghat"
    acc = Ax.zero
    for i, c in enumerate(ec.coeffs):
        if c.is_zero():
            continue
        den_i = A.mul(c.den, ctx.carlitz_factorial(i)) if normalized else c.den
        num = A.mul(c.num, A.exact_div(C, den_i))
        acc = Ax.add(acc, Ax.scalar_mul(num, ctx.carlitz_poly(plain, i).poly))
    target = Ax.scalar_mul(A.exact_div(C, den), F)
    return acc == target


def interpolate(ctx: CarlitzContext, f: Poly, m: int, mode: str = "below") -> Poly:
    """The finite interpolation sum reproducing (-1)^m (D_m/L_m) f.

    mode "below": sum_{alpha in A_{<m}}  f(alpha) e_m(x)/(x - alpha)
    mode "monic": sum_{h in A_{m,+}}     f(h) (e_m(x) - D_m)/(x - h)
    """
    F, den = _normalize_input(ctx, f)
    d = max(F.degree, 0)
    if ctx.q ** m <= d:
        raise LevelTooSmallError(f"need q^m > deg f = {d}")
    A, Ax, k, kx = ctx.A, ctx.Ax, ctx.k, ctx.kx
    em = ctx.e_poly(m)
    x = Ax.gen()
    acc = Ax.zero
    if mode == "below":
        for alpha in ctx.below(m):
            fval = poly_eval(F, alpha) if F.coeffs else A.zero
            if fval.is_zero():
                continue
            quot = Ax.exact_div(em, Ax.sub(x, Ax.constant(alpha)))
            acc = Ax.add(acc, Ax.scalar_mul(fval, quot))
    elif mode == "monic":
        Dm = ctx.factorials.D_at(m)
        em_shift = Ax.sub(em, Ax.constant(Dm))
        for h in ctx.monics(m):
            fval = poly_eval(F, h) if F.coeffs else A.zero
            if fval.is_zero():
                continue
            quot = Ax.exact_div(em_shift, Ax.sub(x, Ax.constant(h)))
            acc = Ax.add(acc, Ax.scalar_mul(fval, quot))
    else:
        raise CarlitzDomainError(f"unknown interpolation mode {mode!r}")
    return kx.poly([k.make(c, den) for c in acc.coeffs])


def stable_coefficient(ctx: CarlitzContext, f: Poly, i: int) -> RatFunc:
    """The normalized g-basis coefficient a_{f,i} at its minimal level.

    Level e+1 with e the top digit position of i; independent of the
    degree of f, so no level guard applies.
    """
    F, den = _normalize_input(ctx, f)
    digits = base_q_digits(i, ctx.q)
    m = len(digits) if digits else 1
    A, k = ctx.A, ctx.k
    count = ctx.q ** m
    s = A.zero
    for alpha in ctx.below(m):
        fval = poly_eval(F, alpha) if F.coeffs else A.zero
        if fval.is_zero():
            continue
        dvals = ctx.family_values("ghat", count, alpha)
        s = A.add(s, A.mul(fval, dvals[count - 1 - i]))
    sign = A.one if m % 2 == 0 else A.neg(A.one)
    return k.make(A.mul(sign, A.mul(ctx.factorials.L_at(m), s)),
                  A.mul(den, ctx.factorials.D_at(m)))


def orthogonality_sum(ctx: CarlitzContext, l: int, j: int, m: int,
                      mode: str = "below") -> RatFunc:
    """sum ghat_l(alpha) g_j(alpha); zero unless l + j = q^m - 1.

    At l + j = q^m - 1 the value is (-1)^m D_m/L_m.
    """
    count = ctx.q ** m
    if mode == "below":
        if l >= count:
            raise CarlitzDomainError("need l < q^m for sums over A_{<m}")
        points = ctx.below(m)
    elif mode == "monic":
        if l >= count or j >= count:
            raise CarlitzDomainError("need l, j < q^m for monic sums")
        points = ctx.monics(m)
    else:
        raise CarlitzDomainError(f"unknown orthogonality mode {mode!r}")
    A = ctx.A
    s = A.zero
    for alpha in points:
        gh = ctx.family_values("ghat", l + 1, alpha)[l]
        g = ctx.family_values("g", j + 1, alpha)[j]
        s = A.add(s, A.mul(gh, g))
    return ctx.k.from_poly(s)


def digit_basis_check(ctx: CarlitzContext, n: int) -> DigitBasisLevel:
    """Evaluate all q^n digit products of the coordinate dual basis on F_q^n.

    The n coordinate functionals phi_0..phi_{n-1} extend by digit products
    to q^n functions; their evaluation matrix against all points of F_q^n
    is reported together with its invertibility over F_q.
    """
    q = ctx.q
    if q ** n > DIGIT_BASIS_LIMIT:
        raise CarlitzGuardError(f"q^n = {q**n} exceeds digit-basis guard")
    field = ctx.field
    size = q ** n
    matrix = []
    for j in range(size):
        digits = base_q_digits(j, q)
        row = []
        for v in range(size):
            coords = base_q_digits(v, q)
            coords += [0] * (n - len(coords))
            val = 1
            for t, c in enumerate(digits):
                if c:
                    val = field.mul(val, field.pow(coords[t], c))
            row.append(val)
        matrix.append(tuple(row))
    invertible = gauss_invert(field, [list(r) for r in matrix]) is not None
    return DigitBasisLevel(n, tuple(matrix), invertible)


def wagner_coefficients(ctx: CarlitzContext, f: Poly, count: int,
                        prec: int | None = None) -> WagnerExpansion:
    """First ``count`` normalized coefficients A_{f,i}, each at its minimal
    level, embedded into the (theta)-adic completion.

    For a polynomial input the tail beyond deg f vanishes identically, so
    the attenuation of the coefficient stream is a constructed guarantee.
    """
    if count > ctx.q ** 3:
        raise CarlitzGuardError("coefficient count exceeds q^3 guard")
    F, den = _normalize_input(ctx, f)
    A, k, kv = ctx.A, ctx.k, ctx.kv
    out = []
    for i in range(count):
        digits = base_q_digits(i, ctx.q)
        m = len(digits) if digits else 1
        cnt = ctx.q ** m
        s = A.zero
        for alpha in ctx.below(m):
            fval = poly_eval(F, alpha) if F.coeffs else A.zero
            if fval.is_zero():
                continue
            s = A.add(s, A.mul(fval, ctx.family_values("Ghat", cnt, alpha)[cnt - 1 - i]))
        sign = A.one if m % 2 == 0 else A.neg(A.one)
        val = k.make(A.mul(sign, s), den)
        out.append(kv.from_ratfunc(val, prec=prec))
    return WagnerExpansion(kv, tuple(out), precision=prec, attenuated=True)


def wagner_exact_coefficients(ctx: CarlitzContext, f: Poly, count: int) -> tuple:
    """Like ``wagner_coefficients`` but keeping the exact k-values."""
    if count > ctx.q ** 3:
        raise CarlitzGuardError("coefficient count exceeds q^3 guard")
    F, den = _normalize_input(ctx, f)
    A, k = ctx.A, ctx.k
    out = []
    for i in range(count):
        digits = base_q_digits(i, ctx.q)
        m = len(digits) if digits else 1
        cnt = ctx.q ** m
        s = A.zero
        for alpha in ctx.below(m):
            fval = poly_eval(F, alpha) if F.coeffs else A.zero
            if fval.is_zero():
                continue
            s = A.add(s, A.mul(fval, ctx.family_values("Ghat", cnt, alpha)[cnt - 1 - i]))
        sign = A.one if m % 2 == 0 else A.neg(A.one)
        out.append(k.make(A.mul(sign, s), den))
    return tuple(out)
