"""Finite fields F_q (q = p^m0) and their extensions F_{q^m}.

Field elements are plain integers in ``[0, q)``.  The base-p digits of the
integer are the coordinates of the element in the polynomial basis
``1, x, x^2, ...`` modulo the defining polynomial, so ``0`` is the zero
element and ``1`` the multiplicative identity.  All arithmetic goes through
the field object (``field.add(a, b)`` etc.); for q = p this is plain
modular arithmetic, otherwise multiplication uses a precomputed table.

Built-in defining polynomials (Conway choices) cover
q in {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}; callers may override the modulus.
Extensions F_{q^m} are represented over F_q with elements packed base q,
so the base-q digits of an extension element are its F_q-coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CarlitzDomainError, CarlitzGuardError

# Defining polynomials over Z/p, ascending coefficients, monic.
# Degree-1 entries make F_p explicit; arithmetic there is plain mod p.
CONWAY_MODULI = {
    2: (1, 1),
    3: (1, 1),
    4: (1, 1, 1),
    5: (3, 1),
    7: (4, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
}

MAX_Q = 256


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m0) with q = p^m0, or raise."""
    if q < 2:
        raise CarlitzDomainError(f"q={q} is not a prime power")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    m0 = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m0 += 1
    if rest != 1:
        raise CarlitzDomainError(f"q={q} is not a prime power")
    return p, m0


# -- tiny Z/p polynomial helpers (tuples, ascending), used only to build
#    field tables and to check irreducibility at construction time.

def _zp_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _zp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_trim(out)


def _zp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and _zp_trim(a):
        a = list(_zp_trim(a))
        if len(a) - 1 < dm:
            break
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - factor * mj) % p
        a = a[:-1]
    return _zp_trim(a)


def _zp_irreducible(m, p) -> bool:
    """Trial division against all monic polynomials of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            cand = []
            n = idx
            for _ in range(d):
                cand.append(n % p)
                n //= p
            cand.append(1)
            # long division remainder test
            if not _zp_mod(m, tuple(cand), p):
                return False
    return True


class FqField:
    """The field F_q with integer-encoded elements.

    Attributes: ``p`` (characteristic), ``m0`` (degree over F_p), ``q``,
    ``modulus`` (ascending coefficient tuple over Z/p, monic).
    """

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        if q > MAX_Q:
            raise CarlitzGuardError(f"q={q} exceeds desk scale (q <= {MAX_Q})")
        p, m0 = _factor_prime_power(q)
        self.p = p
        self.m0 = m0
        self.q = q
        self.char = p
        if modulus is None:
            if q not in CONWAY_MODULI:
                raise CarlitzDomainError(
                    f"no built-in modulus for q={q}; pass one explicitly")
            modulus = CONWAY_MODULI[q]
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m0 + 1 or modulus[-1] != 1:
            raise CarlitzDomainError("modulus must be monic of degree m0")
        if not _zp_irreducible(modulus, p):
            raise CarlitzDomainError("modulus is reducible over Z/p")
        self.modulus = modulus
        self._mul_table = None
        self._inv_table = None
        if m0 > 1:
            self._build_tables()

    # -- encoding helpers ------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinate vector of length m0 over Z/p."""
        out = []
        for _ in range(self.m0):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coords(self, coords) -> int:
        a = 0
        for c in reversed(list(coords)):
            a = a * self.p + (c % self.p)
        return a

    def from_int(self, n: int) -> int:
        """Embed an ordinary integer via the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.q)

    # -- arithmetic ------------------------------------------------------

    def _build_tables(self):
        p, q, m0 = self.p, self.q, self.m0
        mod = self.modulus
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            ca = self.coords(a)
            for b in range(a, q):
                cb = self.coords(b)
                prod = _zp_mod(_zp_mul(ca, cb, p), mod, p)
                v = 0
                for c in reversed(prod):
                    v = v * p + c
                table[a][b] = v
                table[b][a] = v
        self._mul_table = table
        inv = [0] * q
        for a in range(1, q):
            row = table[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    def add(self, a: int, b: int) -> int:
        if self.m0 == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m0 == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m0 == 1:
            return (a * b) % self.p
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise CarlitzDomainError("division by zero in F_q")
        if self.m0 == 1:
            return pow(a, self.p - 2, self.p)
        return self._inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    exact_div = div

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def scalar(self, n: int, a: int) -> int:
        """n-fold sum of a, i.e. (n mod p) * a."""
        return self.mul(self.from_int(n), a)

    def is_zero(self, a: int) -> bool:
        return a == 0

    zero = 0
    one = 1

    @property
    def is_prime_field(self) -> bool:
        return self.m0 == 1

    def __eq__(self, other):
        return (isinstance(other, FqField)
                and other.q == self.q and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("FqField", self.q, self.modulus))

    def __repr__(self):
        return f"FqField(q={self.q})"


class ExtensionField:
    """F_{q^m} presented over an FqField base.

    Elements are integers in ``[0, q^m)`` whose base-q digits are the
    coordinates over the base field in the basis ``1, w, ..., w^(m-1)``,
    w a root of the defining polynomial.  The defining polynomial is the
    lexicographically first monic irreducible of degree m over F_q unless
    one is supplied, so construction is deterministic.
    """

    def __init__(self, base: FqField, m: int, modulus: tuple[int, ...] | None = None):
        if m < 1:
            raise CarlitzDomainError("extension degree must be >= 1")
        self.base = base
        self.m = m
        self.q = base.q ** m
        self.char = base.p
        self.p = base.p
        if modulus is None:
            modulus = self._find_modulus()
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise CarlitzDomainError("extension modulus must be monic of degree m")
        if not self._irreducible(modulus):
            raise CarlitzDomainError("extension modulus is reducible over F_q")
        self.modulus = tuple(modulus)
        self._mul_table = None
        if self.q <= 1024 and m > 1:
            self._build_table()

    # coordinates over the base field
    def coords(self, a: int) -> tuple[int, ...]:
        out = []
        q = self.base.q
        for _ in range(self.m):
            out.append(a % q)
            a //= q
        return tuple(out)

    def from_coords(self, coords) -> int:
        q = self.base.q
        a = 0
        for c in reversed(list(coords)):
            a = a * q + c
        return a

    def embed_base(self, a: int) -> int:
        return a

    def from_int(self, n: int) -> int:
        return self.base.from_int(n)

    def elements(self):
        return range(self.q)

    def gen(self) -> int:
        """The adjoined root w (coordinate vector (0,1,0,...))."""
        return self.base.q

    # -- F_q[w] helpers on coordinate tuples ------------------------------

    def _vec_mul(self, a, b):
        base = self.base
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = base.add(out[i + j], base.mul(ai, bj))
        return out

    def _vec_mod(self, a, mod):
        base = self.base
        a = list(a)
        dm = len(mod) - 1
        while len(a) > dm:
            top = a.pop()
            if top:
                shift = len(a) - dm
                for j in range(dm):
                    a[shift + j] = base.sub(a[shift + j], base.mul(top, mod[j]))
        while len(a) < dm:
            a.append(0)
        return a

    def _irreducible(self, mod) -> bool:
        deg = len(mod) - 1
        if deg == 1:
            return True
        q = self.base.q
        for d in range(1, deg // 2 + 1):
            for idx in range(q ** d):
                cand = []
                n = idx
                for _ in range(d):
                    cand.append(n % q)
                    n //= q
                cand.append(1)
                r = list(mod)
                # remainder of mod by cand
                base = self.base
                dm = len(cand) - 1
                while len(r) - 1 >= dm:
                    r = list(_trim_base(r, base))
                    if len(r) - 1 < dm:
                        break
                    top = r[-1]
                    shift = len(r) - 1 - dm
                    for j, cj in enumerate(cand):
                        r[shift + j] = base.sub(r[shift + j], base.mul(top, cj))
                    r = r[:-1]
                if not _trim_base(r, base):
                    return False
        return True

    def _find_modulus(self):
        q = self.base.q
        m = self.m
        for idx in range(q ** m):
            cand = []
            n = idx
            for _ in range(m):
                cand.append(n % q)
                n //= q
            cand.append(1)
            if self._irreducible(cand):
                return tuple(cand)
        raise CarlitzDomainError("no irreducible polynomial found")  # unreachable

    def _build_table(self):
        qm = self.q
        table = [[0] * qm for _ in range(qm)]
        for a in range(qm):
            ca = self.coords(a)
            for b in range(a, qm):
                prod = self._vec_mod(self._vec_mul(ca, self.coords(b)), self.modulus)
                v = self.from_coords(prod)
                table[a][b] = v
                table[b][a] = v
        self._mul_table = table

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        base = self.base
        q = base.q
        out = 0
        mult = 1
        while a or b:
            out += base.add(a % q, b % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def neg(self, a: int) -> int:
        base = self.base
        q = base.q
        out = 0
        mult = 1
        while a:
            out += base.neg(a % q) * mult
            a //= q
            mult *= q
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        prod = self._vec_mod(self._vec_mul(self.coords(a), self.coords(b)),
                             self.modulus)
        return self.from_coords(prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise CarlitzDomainError("division by zero in F_{q^m}")
        # q^m - 2 exponentiation; fields here are tiny
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    exact_div = div

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def scalar(self, n: int, a: int) -> int:
        return self.mul(self.from_int(n), a)

    def is_zero(self, a: int) -> bool:
        return a == 0

    zero = 0
    one = 1

    @property
    def is_prime_field(self) -> bool:
        return False

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.modulus))

    def __repr__(self):
        return f"ExtensionField(q={self.base.q}^{self.m})"


def _trim_base(c, base):
    i = len(c)
    while i > 0 and base.is_zero(c[i - 1]):
        i -= 1
    return tuple(c[:i])


@dataclass(frozen=True)
class FieldConfig:
    """Construction record for the base field and an optional extension."""

    q: int
    modulus: tuple[int, ...] | None = None
    ext_degree: int | None = None
    ext_modulus: tuple[int, ...] | None = None

    def field(self) -> FqField:
        return FqField(self.q, self.modulus)

    def extension(self) -> ExtensionField | None:
        if self.ext_degree is None:
            return None
        return ExtensionField(self.field(), self.ext_degree, self.ext_modulus)

    @property
    def p(self) -> int:
        return _factor_prime_power(self.q)[0]

    @property
    def m0(self) -> int:
        return _factor_prime_power(self.q)[1]
