"""JSON encoding of the package's value types.

The schemas are fixed and bit-exact so identical runs emit identical
bytes: field elements are base-p coordinate vectors, polynomials are
coefficient lists (ascending), Laurent series are {"lead", "coeffs",
"prec"}, digit streams are {"head", "tail"}, fractions are {"num",
"den"}.  Decoding inverts each encoder given the owning context/ring.
"""

from __future__ import annotations

from .basis import CarlitzContext
from .errors import CarlitzDomainError
from .padic import PadicInteger
from .polys import Poly, RatFunc
from .series import LaurentRing, LaurentSeries


def encode_fq(field, a: int) -> list[int]:
    return list(field.coords(a))


def decode_fq(field, data) -> int:
    return field.from_coords(data)


def encode_apoly(f: Poly) -> list:
    field = f.ring.base
    return [encode_fq(field, c) for c in f.coeffs]


def decode_apoly(ring, data) -> Poly:
    field = ring.base
    return ring.poly([decode_fq(field, c) for c in data])


def encode_ratfunc(r: RatFunc) -> dict:
    return {"num": encode_apoly(r.num), "den": encode_apoly(r.den)}


def decode_ratfunc(k, data) -> RatFunc:
    return k.make(decode_apoly(k.ring, data["num"]),
                  decode_apoly(k.ring, data["den"]))


def encode_series(x: LaurentSeries) -> dict:
    field = x.ring.field
    return {"lead": x.lead,
            "coeffs": [encode_fq(field, c) for c in x.coeffs],
            "prec": x.prec}


def decode_series(ring: LaurentRing, data) -> LaurentSeries:
    field = ring.field
    return ring.make(data["lead"],
                     [decode_fq(field, c) for c in data["coeffs"]],
                     data["prec"])


def encode_padic(y: PadicInteger) -> dict:
    return {"head": list(y.head), "tail": y.tail}


def decode_padic(q: int, data) -> PadicInteger:
    return PadicInteger(q, data["head"], data["tail"])


def encode_value(ctx: CarlitzContext, value):
    """Dispatch on the value's type; used by the CLI result assembly."""
    if isinstance(value, Poly):
        return encode_apoly(value)
    if isinstance(value, RatFunc):
        return encode_ratfunc(value)
    if isinstance(value, LaurentSeries):
        return encode_series(value)
    if isinstance(value, PadicInteger):
        return encode_padic(value)
    if isinstance(value, (int, bool, str)):
        return value
    raise CarlitzDomainError(f"no encoding for {type(value).__name__}")
