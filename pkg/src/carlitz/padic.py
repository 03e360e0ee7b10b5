"""Eventually-constant base-q digit streams (p-adic integers at desk scale).

A stream ``head + (tail repeated)`` with digits in [0, q) encodes the value

    head_value + tail * q^J / (1 - q),    J = len(head),

an element of Z_p whose denominator divides q - 1.  Tail 0 gives the
nonnegative integers, tail q-1 the negative ones.  Canonical form strips
head digits that merely repeat the tail, which makes equality structural.

Addition and negation run through the exact rational value; the class of
streams with denominator dividing q - 1 is closed under both.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CarlitzDomainError, NotIntegerError


class PadicInteger:
    __slots__ = ("q", "head", "tail")

    def __init__(self, q: int, head=(), tail: int = 0):
        if q < 2:
            raise CarlitzDomainError("digit base must be >= 2")
        head = tuple(int(c) for c in head)
        tail = int(tail)
        if not (0 <= tail < q) or any(not (0 <= c < q) for c in head):
            raise CarlitzDomainError("digits must lie in [0, q)")
        while head and head[-1] == tail:
            head = head[:-1]
        self.q = q
        self.head = head
        self.tail = tail

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, q: int) -> "PadicInteger":
        if n >= 0:
            head = []
            while n:
                head.append(n % q)
                n //= q
            return cls(q, head, 0)
        return cls.from_fraction(Fraction(n), q)

    @classmethod
    def from_fraction(cls, value: Fraction, q: int) -> "PadicInteger":
        """Digit-expand a rational whose stream is eventually constant."""
        y = Fraction(value)
        head = []
        for _ in range(10_000):
            t = y * (1 - q)
            if t.denominator == 1 and 0 <= t.numerator < q:
                return cls(q, head, int(t))
            den = y.denominator
            try:
                inv = pow(den % q, -1, q)
            except ValueError:
                raise CarlitzDomainError(
                    f"{value} has no base-{q} digit expansion") from None
            c = (y.numerator * inv) % q
            head.append(c)
            y = (y - c) / q
        raise CarlitzDomainError(f"digit stream of {value} is not eventually constant")

    # -- value views --------------------------------------------------------

    def to_fraction(self) -> Fraction:
        q = self.q
        v = Fraction(0)
        for j, c in enumerate(self.head):
            v += c * q ** j
        v += Fraction(self.tail * q ** len(self.head), 1 - q)
        return v

    def is_integer(self) -> bool:
        return self.tail == 0 or self.tail == self.q - 1

    def to_int(self) -> int:
        if self.tail == 0:
            n = 0
            for c in reversed(self.head):
                n = n * self.q + c
            return n
        if self.tail == self.q - 1:
            fr = self.to_fraction()
            return int(fr)
        raise NotIntegerError("stream does not encode an ordinary integer")

    def digit(self, j: int) -> int:
        return self.head[j] if j < len(self.head) else self.tail

    def digits(self, count: int) -> list[int]:
        return [self.digit(j) for j in range(count)]

    def p_digits(self, count: int, p: int) -> list[int]:
        """First ``count`` base-p digits (q must be a power of p)."""
        qq, m0 = self.q, 0
        while qq > 1:
            if qq % p:
                raise CarlitzDomainError("q is not a power of p")
            qq //= p
            m0 += 1
        out = []
        j = 0
        while len(out) < count:
            c = self.digit(j)
            for _ in range(m0):
                out.append(c % p)
                c //= p
            j += 1
        return out[:count]

    def digit_sum(self) -> int:
        """l_q of a nonnegative integer stream."""
        if self.tail != 0:
            raise CarlitzDomainError("digit sum defined for nonnegative streams only")
        return sum(self.head)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "PadicInteger":
        return PadicInteger.from_fraction(-self.to_fraction(), self.q)

    def __add__(self, other: "PadicInteger") -> "PadicInteger":
        if self.q != other.q:
            raise CarlitzDomainError("digit base mismatch")
        return PadicInteger.from_fraction(self.to_fraction() + other.to_fraction(),
                                          self.q)

    def __sub__(self, other: "PadicInteger") -> "PadicInteger":
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, PadicInteger) and other.q == self.q
                and other.head == self.head and other.tail == self.tail)

    def __hash__(self):
        return hash((self.q, self.head, self.tail))

    def is_zero(self) -> bool:
        return not self.head and self.tail == 0

    def __repr__(self):
        return f"PadicInteger(q={self.q}, head={list(self.head)}, tail={self.tail})"


def as_padic(y, q: int) -> PadicInteger:
    """Coerce an int or PadicInteger to a PadicInteger in base q."""
    if isinstance(y, PadicInteger):
        if y.q != q:
            raise CarlitzDomainError("digit base mismatch")
        return y
    return PadicInteger.from_int(int(y), q)
