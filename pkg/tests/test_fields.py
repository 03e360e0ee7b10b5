import itertools
import random

import pytest

from carlitz.errors import CarlitzDomainError, CarlitzGuardError
from carlitz.fields import CONWAY_MODULI, ExtensionField, FieldConfig, FqField


@pytest.mark.parametrize("q", sorted(CONWAY_MODULI))
def test_builtin_moduli_construct(q):
    f = FqField(q)
    assert f.q == q
    assert f.p ** f.m0 == q
    assert f.modulus[-1] == 1


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(CarlitzDomainError):
        FqField(4, modulus=(1, 0, 1))


def test_desk_scale_guard():
    with pytest.raises(CarlitzGuardError):
        FqField(512)


def test_coords_roundtrip():
    f = FqField(9)
    for a in f.elements():
        cs = f.coords(a)
        assert len(cs) == 2 and all(0 <= c < 3 for c in cs)
        assert f.from_coords(cs) == a


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_field_axioms_exhaustive_small(q):
    f = FqField(q)
    els = list(f.elements())
    sample = els if q <= 4 else random.Random(1).sample(
        list(itertools.product(els, els, els)), 200)
    triples = (itertools.product(els, els, els) if q <= 4 else sample)
    for a, b, c in triples:
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in els:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_frobenius_is_identity_on_prime_subfield():
    f = FqField(9)
    for a in f.elements():
        assert f.pow(a, 9) == a  # x^q = x on F_q


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (2, 3)])
def test_extension_field_axioms(q, m):
    base = FqField(q)
    ext = ExtensionField(base, m)
    assert ext.q == q ** m
    els = list(ext.elements())
    for a in els:
        assert ext.add(a, ext.neg(a)) == 0
        if a:
            assert ext.mul(a, ext.inv(a)) == 1
    rng = random.Random(7)
    for _ in range(100):
        a, b, c = (rng.randrange(ext.q) for _ in range(3))
        assert ext.mul(a, ext.add(b, c)) == ext.add(ext.mul(a, b), ext.mul(a, c))
    # base field embeds as the constant digits
    for a in range(q):
        for b in range(q):
            assert ext.mul(a, b) == base.mul(a, b)
            assert ext.add(a, b) == base.add(a, b)


def test_field_config():
    cfg = FieldConfig(q=4, ext_degree=2)
    f = cfg.field()
    assert f.q == 4 and cfg.p == 2 and cfg.m0 == 2
    ext = cfg.extension()
    assert ext.q == 16
    assert FieldConfig(q=3).extension() is None
