"""Carlitz factorial tables and the four polynomial families over F_q[theta].

The classical objects, for A = F_q[theta]:

    [i]  = theta^(q^i) - theta
    D_0  = 1,  D_i = [i] * D_{i-1}^q      (product of all monics of degree i)
    L_0  = 1,  L_i = [i] * L_{i-1}        (lcm of all monics of degree <= i)
    Pi(j) = prod_t D_t^(c_t)              (j = sum c_t q^t base q)

    e_t(x) = prod_{deg alpha < t} (x - alpha)       F_q-linear, degree q^t
    g_j(x) = prod_t e_t(x)^(c_t)                    degree j
    G_j(x) = g_j(x) / Pi(j)                         integer-valued on A

and the dual family generated digit-wise by
``e_t^v`` (v < q-1) and ``e_t^(q-1) - D_t^(q-1)`` (v = q-1), divided by
``D_t^v`` for the normalized duals.

``CarlitzContext`` owns the base rings (A, k, the completion at infinity
with pi = 1/theta, and the (theta)-adic completion), the factorial table
and the family caches; everything downstream takes a context.  Family
polynomial caches are bounded by ``max_family_index`` (default q^3).

Moore / Vandermonde / Wronskian matrices: with x_0..x_m in A of degree
<= m, the Moore matrix M[i][j] = x_j^(q^i) factors as M = V W where
V[i][j] = [i]^j (row i = 0 reads (1,0,...,0)) and W[i][j] is the j-th
column's i-th divided derivative.  The m x m Vandermonde determinant at
nodes (0, [1], ..., [m-1]) equals Pi((q^m - 1)/(q - 1)) exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BracketIndexError, CarlitzDomainError, CarlitzError,
                     IndexGuardError)
from .fields import FqField
from .linalg import det_bareiss, mat_eq, mat_mul
from .polys import (FracField, Poly, PolyRing, binom_mod, divided_derivative,
                    enumerate_below, enumerate_monic)
from .series import LaurentRing

FAMILIES = ("e", "g", "G", "ghat", "Ghat")


def base_q_digits(j: int, q: int) -> list[int]:
    if j < 0:
        raise CarlitzDomainError("digit expansion of a negative index")
    out = []
    while j:
        out.append(j % q)
        j //= q
    return out


def digit_sum(j: int, q: int) -> int:
    return sum(base_q_digits(j, q))


class FactorialTable:
    """Brackets [i] and the factorial towers D_i, L_i, grown on demand."""

    def __init__(self, A: PolyRing):
        self.A = A
        q = A.base.q
        theta = A.gen()
        self._theta = theta
        self._q = q
        self.brackets = [A.zero]          # [0] unused; index 0 kept as 0
        self.D = [A.one]
        self.L = [A.one]

    @property
    def max_index(self) -> int:
        return len(self.D) - 1

    def grow(self, upto: int) -> None:
        A, q = self.A, self._q
        while self.max_index < upto:
            i = self.max_index + 1
            br = A.sub(A.pow(self._theta, q ** i), self._theta)
            self.brackets.append(br)
            self.D.append(A.mul(br, A.pow(self.D[-1], q)))
            self.L.append(A.mul(br, self.L[-1]))

    def bracket(self, i: int) -> Poly:
        if i < 1:
            raise BracketIndexError("bracket index must be >= 1")
        self.grow(i)
        return self.brackets[i]

    def D_at(self, i: int) -> Poly:
        self.grow(i)
        return self.D[i]

    def L_at(self, i: int) -> Poly:
        self.grow(i)
        return self.L[i]

    def factorial(self, j: int) -> Poly:
        """Pi(j), the digit-wise Carlitz factorial."""
        A = self.A
        out = A.one
        for t, c in enumerate(base_q_digits(j, self._q)):
            if c:
                out = A.mul(out, A.pow(self.D_at(t), c))
        return out


@dataclass(frozen=True)
class CarlitzPoly:
    family: str
    index: int
    poly: Poly


class CarlitzContext:
    """Base rings and cached Carlitz data for one choice of F_q."""

    def __init__(self, q: int, modulus=None, max_family_index: int | None = None):
        self.field = FqField(q, modulus)
        self.q = self.field.q
        self.p = self.field.p
        self.A = PolyRing(self.field, "theta")
        self.k = FracField(self.A)
        self.Ax = PolyRing(self.A, "x")
        self.kx = PolyRing(self.k, "x")
        self.kinf = LaurentRing(self.field, "pi")
        self.kv = LaurentRing(self.field, "theta")
        self.factorials = FactorialTable(self.A)
        self.max_family_index = max_family_index if max_family_index is not None \
            else self.q ** 3
        self._e_cache: dict[int, Poly] = {}
        self._family_cache: dict[tuple[str, int], CarlitzPoly] = {}

    @property
    def theta(self) -> Poly:
        return self.A.gen()

    def monics(self, d: int):
        return enumerate_monic(self.A, d)

    def below(self, d: int):
        return enumerate_below(self.A, d)

    # -- embeddings -------------------------------------------------------

    def at_infinity(self, f: Poly):
        return self.kinf.from_apoly(f)

    def at_v(self, f: Poly):
        return self.kv.from_apoly(f)

    # -- factorial shorthands ----------------------------------------------

    def bracket(self, i: int) -> Poly:
        return self.factorials.bracket(i)

    def carlitz_factorial(self, j: int) -> Poly:
        return self.factorials.factorial(j)

    def DL_ratio(self, m: int) -> Poly:
        """D_m / L_m as an exact element of A (equals Pi(q^m - 1))."""
        return self.factorials.factorial(self.q ** m - 1)

    # -- the linear family e_t ----------------------------------------------

    def e_poly(self, t: int) -> Poly:
        """e_t as a polynomial in x over A."""
        if t in self._e_cache:
            return self._e_cache[t]
        if self.q ** t > self.q * self.max_family_index:
            raise IndexGuardError(f"e_{t} exceeds the family cache bound")
        Ax, A = self.Ax, self.A
        if t == 0:
            out = Ax.gen()
        else:
            out = Ax.one
            x = Ax.gen()
            for alpha in self.below(t):
                out = Ax.mul(out, Ax.sub(x, Ax.constant(alpha)))
        self._e_cache[t] = out
        return out

    def _dual_piece(self, t: int, v: int) -> Poly:
        """ghat_{v q^t} over A."""
        Ax = self.Ax
        e = self.e_poly(t)
        if v < self.q - 1:
            return Ax.pow(e, v)
        D = self.factorials.D_at(t)
        return Ax.sub(Ax.pow(e, v), Ax.constant(self.A.pow(D, v)))

    def carlitz_poly(self, family: str, j: int) -> CarlitzPoly:
        """The cached family member; e is indexed by level t, others by j."""
        if family not in FAMILIES:
            raise CarlitzDomainError(f"unknown family {family!r}")
        key = (family, j)
        if key in self._family_cache:
            return self._family_cache[key]
        if family == "e":
            cp = CarlitzPoly("e", j, self.e_poly(j))
            self._family_cache[key] = cp
            return cp
        if j > self.max_family_index:
            raise IndexGuardError(
                f"family index {j} exceeds cache bound {self.max_family_index}")
        Ax = self.Ax
        digits = base_q_digits(j, self.q)
        if family in ("g", "ghat"):
            out = Ax.one
            for t, c in enumerate(digits):
                if c:
                    piece = Ax.pow(self.e_poly(t), c) if family == "g" \
                        else self._dual_piece(t, c)
                    out = Ax.mul(out, piece)
            cp = CarlitzPoly(family, j, out)
        else:
            base = self.carlitz_poly("g" if family == "G" else "ghat", j).poly
            Pi = self.carlitz_factorial(j)
            kx, k = self.kx, self.k
            coeffs = [k.make(c, Pi) for c in base.coeffs]
            cp = CarlitzPoly(family, j, kx.poly(coeffs))
        self._family_cache[key] = cp
        return cp

    # -- fast exact values at A-points ----------------------------------------

    def e_value(self, t: int, x0: Poly) -> Poly:
        """e_t(x0) for x0 in A, as the direct product over A_{<t}."""
        A = self.A
        if t == 0:
            return x0
        out = A.one
        for alpha in self.below(t):
            out = A.mul(out, A.sub(x0, alpha))
        return out

    def family_values(self, family: str, count: int, x0: Poly) -> list[Poly]:
        """[family_j(x0) for j < count], exactly in A.

        Values of the normalized families at A-points are integral, realized
        here by digit-wise exact division e_t(x0) / D_t.
        """
        if family not in ("g", "ghat", "G", "Ghat"):
            raise CarlitzDomainError(f"family {family!r} has no value table")
        A, q = self.A, self.q
        tmax = 0
        while q ** (tmax + 1) <= max(count - 1, 1):
            tmax += 1
        evals = [self.e_value(t, x0) for t in range(tmax + 1)]
        normalized = family in ("G", "Ghat")
        dual = family in ("ghat", "Ghat")
        pieces: list[list[Poly]] = []
        for t in range(tmax + 1):
            base_val = evals[t]
            if normalized:
                base_val = A.exact_div(base_val, self.factorials.D_at(t))
            row = [A.one]
            for v in range(1, q):
                row.append(A.mul(row[-1], base_val))
            if dual:
                if normalized:
                    row[q - 1] = A.sub(row[q - 1], A.one)
                else:
                    D = self.factorials.D_at(t)
                    row[q - 1] = A.sub(row[q - 1], A.pow(D, q - 1))
            pieces.append(row)
        values = [A.one] * count
        for j in range(1, count):
            digits = base_q_digits(j, q)
            t = len(digits) - 1
            c = digits[-1]
            rest = j - c * q ** t
            values[j] = A.mul(pieces[t][c], values[rest])
        return values

    def eval_carlitz(self, family: str, j: int, x, prec=None):
        """Evaluate a family member at x (APoly, RatFunc, or LaurentSeries)."""
        if family != "e" and j > self.max_family_index:
            raise IndexGuardError(
                f"family index {j} exceeds cache bound {self.max_family_index}")
        if isinstance(x, Poly) and x.ring == self.A:
            if family == "e":
                return self.e_value(j, x)
            return self.family_values(family, j + 1, x)[j]
        cp = self.carlitz_poly(family, j)
        from .polys import RatFunc, poly_eval
        if isinstance(x, RatFunc):
            k = self.k
            if family in ("e", "g", "ghat"):
                return poly_eval(cp.poly, x, coeff_map=k.from_poly)
            return poly_eval(cp.poly, x)
        # Laurent series point
        ring = x.ring
        if family in ("e", "g", "ghat"):
            return poly_eval(cp.poly, x, coeff_map=ring.from_apoly)
        return poly_eval(cp.poly, x,
                         coeff_map=lambda r: ring.from_ratfunc(r, prec=prec))

    # -- Frobenius / determinant identities -------------------------------------

    def frobenius_expand(self, f: Poly, i: int) -> Poly:
        """sum_j (d_j f)(theta) [i]^j; asserted equal to f^(q^i)."""
        A = self.A
        theta = self.theta
        br = A.zero if i == 0 else self.bracket(i)
        acc = A.zero
        power = A.one
        for j in range(f.degree + 1):
            dj = divided_derivative(f, j)
            acc = A.add(acc, A.mul(dj(theta), power))
            power = A.mul(power, br)
        frob = A.pow(f, self.q ** i)
        if acc != frob:
            raise CarlitzError("divided-derivative Frobenius expansion failed")
        return acc

    def matrix_triple(self, xs: list[Poly]) -> "MatrixTriple":
        m = len(xs) - 1
        if m < 0:
            raise CarlitzDomainError("need at least one input")
        for x in xs:
            if x.degree > m:
                raise CarlitzDomainError("inputs must have degree <= m")
        A, q = self.A, self.q
        M = [[A.pow(x, q ** i) for x in xs] for i in range(m + 1)]
        V = []
        for i in range(m + 1):
            node = A.zero if i == 0 else self.bracket(i)
            row = [A.one]
            for _ in range(m):
                row.append(A.mul(row[-1], node))
            V.append(row)
        W = [[divided_derivative(x, i) for x in xs] for i in range(m + 1)]
        if not mat_eq(A, M, mat_mul(A, V, W)):
            raise CarlitzError("Moore = Vandermonde * Wronskian identity failed")
        return MatrixTriple(m, M, V, W, tuple(xs))

    def vandermonde_factorial(self, m: int) -> Poly:
        """det of the m x m bracket Vandermonde at nodes (0, [1], ..., [m-1]).

        Equals Pi((q^m - 1)/(q - 1)) exactly, for every m >= 1.
        """
        if m < 1:
            raise CarlitzDomainError("m must be >= 1")
        A = self.A
        V = []
        for i in range(m):
            node = A.zero if i == 0 else self.bracket(i)
            row = [A.one]
            for _ in range(m - 1):
                row.append(A.mul(row[-1], node))
            V.append(row)
        return det_bareiss(A, V)

    def binom_mod(self, n: int, kk: int) -> int:
        return binom_mod(n, kk, self.p)

    def __repr__(self):
        return f"CarlitzContext(q={self.q})"


@dataclass(frozen=True)
class MatrixTriple:
    m: int
    moore: list
    vandermonde: list
    wronskian: list
    inputs: tuple
