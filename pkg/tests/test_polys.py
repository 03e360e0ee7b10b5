import pytest

from carlitz.errors import CarlitzDomainError, EnumerationTooLargeError
from carlitz.polys import (DividedDerivativeTable, binom_mod, clear_denominators,
                           divided_derivative, enumerate_below, enumerate_monic,
                           multinomial_mod)
from conftest import rand_apoly


def test_enumerate_monic_trivial_cases(ctx2):
    A = ctx2.A
    assert list(enumerate_monic(A, 0)) == [A.one]
    theta = A.gen()
    assert list(enumerate_monic(A, 1)) == [theta, theta + A.one]


def test_enumerate_below_trivial_cases(ctx2):
    A = ctx2.A
    got = list(enumerate_below(A, 1))
    assert got == [A.zero, A.one]
    assert len(list(enumerate_below(A, 2))) == 4
    theta = A.gen()
    assert set(map(repr, enumerate_below(A, 2))) == set(
        map(repr, [A.zero, A.one, theta, theta + A.one]))


def test_enumeration_counts_by_brute_force(ctx3):
    # independent count: 3^2 distinct monic degree-2 polynomials
    polys = list(enumerate_monic(ctx3.A, 2))
    assert len(polys) == 9
    assert len(set(polys)) == 9
    assert all(f.is_monic() and f.degree == 2 for f in polys)
    assert len(list(enumerate_below(ctx3.A, 1))) == 3


def test_enumeration_guard(ctx2):
    with pytest.raises(EnumerationTooLargeError):
        list(enumerate_monic(ctx2.A, 64))


def test_divided_derivative_examples(ctx2, ctx3):
    # binom(2,1) = 2 kills theta^2 in characteristic 2
    A2 = ctx2.A
    f = A2.gen() ** 2
    assert divided_derivative(f, 1).is_zero()
    # identity case j = 0
    g = rand_apoly(ctx2, __import__("random").Random(3), 5)
    assert divided_derivative(g, 0) == g
    # theta^3 + theta at j=2 over F_3: binom(3,2) = 3 = 0
    A3 = ctx3.A
    h = A3.gen() ** 3 + A3.gen()
    assert divided_derivative(h, 2).is_zero()


def test_divided_derivative_vanishes_beyond_degree(ctx3):
    f = ctx3.A.poly([1, 2, 1])
    assert divided_derivative(f, 5).is_zero()


def test_taylor_identity_exact(ctx2, ctx3, rng):
    # f(x0) = sum_j d_j f(theta) (x0 - theta)^j for deg f <= 6, x0 in A_{<2}
    for ctx in (ctx2, ctx3):
        for f_trial in range(8):
            f = rand_apoly(ctx, rng, 6)
            table = DividedDerivativeTable(f)
            for x0 in enumerate_below(ctx.A, 2):
                assert table.taylor_check(x0)


def test_divmod_and_gcd(ctx3, rng):
    A = ctx3.A
    for _ in range(25):
        f = rand_apoly(ctx3, rng, 6)
        g = rand_apoly(ctx3, rng, 3, nonzero=True)
        q, r = A.divmod(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree
        d = A.gcd(f * g, g)
        assert A.divmod(g, d)[1].is_zero()


def test_exact_div_raises_on_inexact(ctx2):
    A = ctx2.A
    theta = A.gen()
    with pytest.raises(CarlitzDomainError):
        A.exact_div(theta ** 2 + A.one, theta ** 2 + theta)


def test_frac_field_canonical_form(ctx3):
    k, A = ctx3.k, ctx3.A
    theta = A.gen()
    a = k.make(theta ** 2 + theta, theta)          # reduces to theta + 1
    assert a == k.from_poly(theta + A.one)
    b = k.make(A.from_int(2) * theta, A.from_int(2))  # denominator made monic
    assert b.den == A.one and b.num == theta
    c = k.make(theta, theta ** 2)
    assert c.num == A.one and c.den == theta
    assert (c * k.from_poly(theta ** 2)) == k.from_poly(theta)


def test_clear_denominators(ctx3):
    k, A, kx = ctx3.k, ctx3.A, ctx3.kx
    theta = A.gen()
    f = kx.poly([k.make(A.one, theta), k.from_poly(theta)])
    F, den = clear_denominators(f)
    assert den == theta
    assert F.coeffs[0] == A.one and F.coeffs[1] == theta * theta


def test_binom_mod_matches_math_comb():
    from math import comb
    for p in (2, 3, 5):
        for n in range(40):
            for k in range(n + 1):
                assert binom_mod(n, k, p) == comb(n, k) % p


def test_multinomial_mod_matches_factorials():
    from math import comb
    for p in (2, 3):
        for n in range(15):
            for a in range(n + 1):
                for b in range(n - a + 1):
                    c = n - a - b
                    exact = comb(n, a) * comb(n - a, b)
                    assert multinomial_mod(n, (a, b, c), p) == exact % p
