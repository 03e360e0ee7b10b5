"""The group of base-q digit permutations and its actions.

A finitely supported permutation rho of the digit positions {0, 1, ...}
acts on a digit stream by moving the digit at position j to position
rho(j).  That single move induces every action implemented here:

* on Z_p (digit streams), with the conjugate y -> -rho(-y);
* on coefficient streams of binomial-basis functions (index relabeling);
* on divided power series u^i/i! -> u^(rho i)/(rho i)!, a ring map;
* on F_q((pi)) by permuting the nonnegative pi-exponents;
* on pairs (x, y) in k_infinity^* x Z_p;
* on finite Dirac combinations supported in F_q[[pi]] (pushforward);
* coefficient-wise on any stream with coefficients in F_q((pi));
* on a finite extension of k_infinity through a choice of basis.

Negative pi-exponents are fixed pointwise (the permutation moves digit
positions, which are nonnegative); this is the minimal extension with
which the action on special points (pi^i, -i) is coherent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (CarlitzDomainError, CarlitzGuardError, PrecisionError,
                     WindowOverflowError)
from .fields import ExtensionField
from .linalg import gauss_invert, mat_vec
from .measures import DividedPowerSeries
from .padic import PadicInteger, as_padic
from .polys import binom_mod, multinomial_mod
from .series import LaurentRing, LaurentSeries

CONGRUENCE_GUARD = 2 ** 12


class DigitPermutation:
    """A bijection of {0, 1, ...} moving finitely many positions."""

    def __init__(self, mapping: dict[int, int], q: int):
        mapping = {int(a): int(b) for a, b in mapping.items() if a != b}
        if any(a < 0 or b < 0 for a, b in mapping.items()):
            raise CarlitzDomainError("digit positions are nonnegative")
        if set(mapping) != set(mapping.values()) or \
                len(set(mapping.values())) != len(mapping):
            raise CarlitzDomainError("mapping is not a bijection of its support")
        self.mapping = mapping
        self.q = q

    @classmethod
    def identity(cls, q: int) -> "DigitPermutation":
        return cls({}, q)

    @classmethod
    def swap(cls, i: int, j: int, q: int) -> "DigitPermutation":
        return cls({i: j, j: i}, q)

    @classmethod
    def parse(cls, text: str, q: int) -> "DigitPermutation":
        """Parse the literal format "from:to,from:to,..."."""
        mapping = {}
        text = text.strip()
        if text:
            for part in text.split(","):
                a, _, b = part.partition(":")
                mapping[int(a)] = int(b)
        return cls(mapping, q)

    def __call__(self, j: int) -> int:
        return self.mapping.get(j, j)

    def inverse(self) -> "DigitPermutation":
        return DigitPermutation({b: a for a, b in self.mapping.items()}, self.q)

    def compose(self, other: "DigitPermutation") -> "DigitPermutation":
        """self after other: (self . other)(j) = self(other(j))."""
        if other.q != self.q:
            raise CarlitzDomainError("digit base mismatch")
        support = set(self.mapping) | set(other.mapping)
        return DigitPermutation({j: self(other(j)) for j in support}, self.q)

    def max_moved(self) -> int:
        """Largest position touched; -1 for the identity."""
        if not self.mapping:
            return -1
        return max(max(self.mapping), max(self.mapping.values()))

    def block_size(self) -> int:
        """q^(s+1) with s the largest moved position; blocks of this size
        are stable under the index action."""
        return self.q ** (self.max_moved() + 1)

    def is_identity(self) -> bool:
        return not self.mapping

    def act_index(self, n: int) -> int:
        """The induced action on a nonnegative integer's digit expansion."""
        if n < 0:
            raise CarlitzDomainError("index action applies to nonnegative integers")
        q = self.q
        out = 0
        j = 0
        while n:
            c = n % q
            if c:
                out += c * q ** self(j)
            n //= q
            j += 1
        return out

    def __eq__(self, other):
        return (isinstance(other, DigitPermutation)
                and other.q == self.q and other.mapping == self.mapping)

    def __repr__(self):
        pairs = ",".join(f"{a}:{b}" for a, b in sorted(self.mapping.items()))
        return f"DigitPermutation({pairs or 'id'}, q={self.q})"


# ---------------------------------------------------------------------------
# action on digit streams


def rho_zp(rho: DigitPermutation, y) -> PadicInteger:
    """Move the digit at position j to position rho(j)."""
    y = as_padic(y, rho.q)
    inv = rho.inverse()
    span = max(rho.max_moved() + 1, len(y.head))
    head = [y.digit(inv(j)) for j in range(span)]
    return PadicInteger(rho.q, head, y.tail)


def rho_hat(rho: DigitPermutation, y) -> PadicInteger:
    """The conjugate action y -> -rho(-y)."""
    y = as_padic(y, rho.q)
    return -rho_zp(rho, -y)


# ---------------------------------------------------------------------------
# binomial-coefficient streams


def binom_padic_mod(y, j: int, p: int, q: int) -> int:
    """binom(y, j) mod p for a digit-stream upper argument."""
    y = as_padic(y, q)
    jd = []
    n = j
    while n:
        jd.append(n % p)
        n //= p
    if not jd:
        return 1
    yd = y.p_digits(len(jd), p)
    out = 1
    for yi, ji in zip(yd, jd):
        out = (out * binom_mod(yi, ji, p)) % p
        if out == 0:
            return 0
    return out


class MahlerFunction:
    """A finite coefficient stream c_j encoding y -> sum c_j binom(y, j).

    Two streams are equal iff their coefficients agree (the binomial
    functions are linearly independent), so equality is structural.
    """

    def __init__(self, ring, coeffs: dict):
        self.ring = ring
        self.coeffs = {j: c for j, c in coeffs.items() if not ring.is_zero(c)}

    def evaluate(self, y, q: int):
        p = self.ring.char
        acc = self.ring.zero
        for j, c in self.coeffs.items():
            b = binom_padic_mod(y, j, p, q)
            if b == 0:
                continue
            term = c if b == 1 else self.ring.mul(self.ring.from_int(b), c)
            acc = self.ring.add(acc, term)
        return acc

    def __eq__(self, other):
        return (isinstance(other, MahlerFunction) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __repr__(self):
        return f"MahlerFunction({sorted(self.coeffs)})"


def act_function(rho: DigitPermutation, f: MahlerFunction) -> MahlerFunction:
    """Relabel the stream: the coefficient at j moves to index rho_* j.

    Pointwise this is precomposition with the inverse digit action.
    """
    return MahlerFunction(f.ring,
                          {rho.act_index(j): c for j, c in f.coeffs.items()})


def unit_power_stream(ring, u: LaurentSeries, count: int) -> MahlerFunction:
    """The stream of y -> u^y for a one-unit u: coefficients (u-1)^j."""
    w = ring.sub(u, ring.one)
    coeffs = {}
    power = ring.one
    for j in range(count):
        coeffs[j] = power
        power = ring.mul(power, w)
    return MahlerFunction(ring, coeffs)


# ---------------------------------------------------------------------------
# divided power series


def act_divided_power(rho: DigitPermutation,
                      h: DividedPowerSeries) -> DividedPowerSeries:
    """Reindex u^i/i! -> u^(rho_* i)/(rho_* i)! (an algebra automorphism).

    The truncation window [0, N) must be stable under the index action;
    enlarging N to a multiple of the permutation's block size always works.
    """
    n = h.order
    images = [rho.act_index(i) for i in range(n)]
    if sorted(images) != list(range(n)):
        raise WindowOverflowError(
            f"truncation order {n} is not stable; use a multiple of "
            f"{rho.block_size()}")
    out = [h.ring.zero] * n
    for i, c in enumerate(h.coeffs):
        out[images[i]] = c
    return DividedPowerSeries(h.ring, tuple(out))


# ---------------------------------------------------------------------------
# the action on F_q((pi))


def act_kinfty(rho: DigitPermutation, x: LaurentSeries) -> LaurentSeries:
    """Permute nonnegative pi-exponents; negative exponents stay fixed.

    With finite precision the output window is floored to a stable block
    boundary; a window smaller than one block is an error.
    """
    ring = x.ring
    if ring.field.q != rho.q:
        raise CarlitzDomainError("digit base mismatch")
    B = rho.block_size()
    prec = x.prec
    if prec is None:
        out_prec = None
    elif prec <= 0:
        out_prec = prec
    else:
        if prec < B and not rho.is_identity():
            raise PrecisionError(
                f"known window {prec} is smaller than the permutation block {B}")
        out_prec = (prec // B) * B
    entries = {}
    for i, c in enumerate(x.coeffs):
        e = x.lead + i
        if c == 0:
            continue
        e2 = rho.act_index(e) if e >= 0 else e
        if out_prec is None or e2 < out_prec:
            entries[e2] = c
    if not entries:
        return ring.zero if out_prec is None else ring.zero_to(out_prec)
    lo = min(entries)
    hi = max(entries)
    coeffs = [entries.get(e, 0) for e in range(lo, hi + 1)]
    return ring.make(lo, coeffs, out_prec)


def act_sinfty(rho: DigitPermutation, s):
    """Pair action on (x, y): the pi-exponent action and the conjugate
    digit action; preserves the special points (pi^i, -i)."""
    return type(s)(act_kinfty(rho, s.x), rho_hat(rho, s.y))


# ---------------------------------------------------------------------------
# measures supported on O = F_q[[pi]] (finite Dirac combinations)


@dataclass(frozen=True)
class DiracOnO:
    """sum_i c_i delta_{alpha_i} with alpha_i in F_q[[pi]] (exact points)."""

    pairs: tuple           # ((coeff LaurentSeries, point LaurentSeries), ...)

    def normalized(self) -> "DiracOnO":
        merged: dict = {}
        for c, pt in self.pairs:
            key = (pt.lead, pt.coeffs, pt.prec)
            if key in merged:
                merged[key] = (merged[key][0] + c, pt)
            else:
                merged[key] = (c, pt)
        pairs = tuple((c, pt) for c, pt in merged.values()
                      if not c.is_known_zero())
        return DiracOnO(pairs)


def dirac_on_o(ring: LaurentRing, points) -> DiracOnO:
    return DiracOnO(tuple((ring.one, pt) for pt in points)).normalized()


def convolve_dirac(a: DiracOnO, b: DiracOnO) -> DiracOnO:
    """(sum c_i d_{x_i}) * (sum e_j d_{y_j}) = sum c_i e_j d_{x_i + y_j}."""
    pairs = []
    for c, x in a.pairs:
        for e, y in b.pairs:
            pairs.append((c * e, x + y))
    return DiracOnO(tuple(pairs)).normalized()


def act_measure(rho: DigitPermutation, mu: DiracOnO) -> DiracOnO:
    """Pushforward along the pi-exponent action: each point moves."""
    for _, pt in mu.pairs:
        if pt.coeffs and pt.lead < 0:
            raise CarlitzDomainError("measure points must lie in F_q[[pi]]")
    return DiracOnO(tuple((c, act_kinfty(rho, pt)) for c, pt in mu.pairs)
                    ).normalized()


def act_coefficientwise(rho: DigitPermutation, target):
    """Apply the pi-exponent action to every coefficient, indices fixed."""
    if isinstance(target, MahlerFunction):
        return MahlerFunction(target.ring,
                              {j: act_kinfty(rho, c)
                               for j, c in target.coeffs.items()})
    if isinstance(target, DividedPowerSeries):
        return DividedPowerSeries(target.ring,
                                  tuple(act_kinfty(rho, c)
                                        for c in target.coeffs))
    # Wagner expansions and other coefficient records
    return type(target)(target.ring,
                        tuple(act_kinfty(rho, c) for c in target.coeffs))


# ---------------------------------------------------------------------------
# the extended action on unramified extensions


class ExtendedActionContext:
    """Coordinates of F_{q^m}((pi)) over F_q((pi)) in a constant-field basis.

    The basis must start with 1 and consist of F_{q^m} constants; its
    coordinate matrix over F_q is inverted once at construction.
    """

    def __init__(self, ring: LaurentRing, basis):
        ext = ring.field
        if not isinstance(ext, ExtensionField):
            raise CarlitzDomainError("ring must lie over an extension field")
        self.ring = ring
        self.ext = ext
        self.base_ring = LaurentRing(ext.base, ring.var)
        basis = tuple(basis)
        if len(basis) != ext.m:
            raise CarlitzDomainError("basis size must equal the extension degree")
        if basis[0] != ext.one:
            raise CarlitzDomainError("basis must start with 1")
        self.basis = basis
        cols = [ext.coords(b) for b in basis]
        matrix = [[cols[e][r] for e in range(ext.m)] for r in range(ext.m)]
        inv = gauss_invert(ext.base, matrix)
        if inv is None:
            raise CarlitzDomainError("basis is linearly dependent over F_q")
        self._matrix = matrix
        self._inv = inv

    def coordinates(self, beta: LaurentSeries) -> list[LaurentSeries]:
        """Split beta into its m coordinate series over F_q."""
        ext = self.ext
        m = ext.m
        comps = [[] for _ in range(m)]
        for c in beta.coeffs:
            vec = mat_vec(ext.base, self._inv, list(ext.coords(c)))
            for e in range(m):
                comps[e].append(vec[e])
        return [self.base_ring.make(beta.lead, comp, beta.prec)
                for comp in comps]

    def combine(self, comps) -> LaurentSeries:
        ring = self.ring
        out = ring.zero
        for e, k_e in enumerate(comps):
            lifted = ring.make(k_e.lead, k_e.coeffs, k_e.prec)
            out = ring.add(out, ring.scalar_mul(self.basis[e], lifted))
        return out


def extend_unramified(actx: ExtendedActionContext, rho: DigitPermutation,
                      beta: LaurentSeries) -> LaurentSeries:
    """Act on each F_q-coordinate and recombine along the basis."""
    comps = actx.coordinates(beta)
    return actx.combine([act_kinfty(rho, k_e) for k_e in comps])


# ---------------------------------------------------------------------------
# the multinomial congruence


def congruence_check(rho: DigitPermutation, m: int, n: int) -> bool:
    """Compare the two relabelings of binom(y,m) binom(y,n) mod p.

    s1 relabels the product's binomial expansion; s2 expands the product
    of the relabeled factors.  Both are collected as coefficient streams
    on the binomial basis and compared exactly mod p.
    """
    if m > CONGRUENCE_GUARD or n > CONGRUENCE_GUARD:
        raise CarlitzGuardError(f"indices exceed guard {CONGRUENCE_GUARD}")
    p = _char_of(rho.q)
    s1: dict[int, int] = {}
    for k in range(m + 1):
        c = multinomial_mod(m + n - k, (k, m - k, n - k), p)
        if c:
            idx = rho.act_index(m + n - k)
            s1[idx] = (s1.get(idx, 0) + c) % p
    rm, rn = rho.act_index(m), rho.act_index(n)
    s2: dict[int, int] = {}
    for k in range(rm + 1):
        c = multinomial_mod(rm + rn - k, (k, rm - k, rn - k), p)
        if c:
            idx = rm + rn - k
            s2[idx] = (s2.get(idx, 0) + c) % p
    s1 = {j: c for j, c in s1.items() if c}
    s2 = {j: c for j, c in s2.items() if c}
    return s1 == s2


def _char_of(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p
