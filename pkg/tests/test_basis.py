import random

import pytest

from carlitz.errors import BracketIndexError, CarlitzDomainError, IndexGuardError
from carlitz.linalg import det_bareiss
from carlitz.polys import binom_mod, enumerate_below, enumerate_monic, poly_eval
from conftest import rand_apoly


def monic_irreducibles(ctx, max_deg):
    """Brute-force sieve: monic f is prime iff no smaller monic divides it."""
    A = ctx.A
    out = {d: [] for d in range(1, max_deg + 1)}
    for d in range(1, max_deg + 1):
        for f in enumerate_monic(A, d):
            prime = True
            for e in range(1, d // 2 + 1):
                for g in enumerate_monic(A, e):
                    if A.divmod(f, g)[1].is_zero():
                        prime = False
                        break
                if not prime:
                    break
            if prime:
                out[d].append(f)
    return out


def test_bracket_examples(ctx2, ctx3):
    A2, th2 = ctx2.A, ctx2.theta
    assert ctx2.bracket(1) == th2 ** 2 + th2
    # factorization over the monic primes of degree 1 (trial division oracle)
    assert ctx2.bracket(1) == th2 * (th2 + A2.one)
    A3, th3 = ctx3.A, ctx3.theta
    prod = A3.one
    for c in range(3):
        prod = prod * (th3 + A3.from_int(c))
    assert ctx3.bracket(1) == prod
    with pytest.raises(BracketIndexError):
        ctx2.bracket(0)


@pytest.mark.parametrize("qname,imax", [("ctx2", 3), ("ctx3", 3)])
def test_bracket_prime_factorization(qname, imax, request):
    # [i] = product of monic primes of degree dividing i
    ctx = request.getfixturevalue(qname)
    primes = monic_irreducibles(ctx, imax)
    A = ctx.A
    for i in range(1, imax + 1):
        prod = A.one
        for d in range(1, i + 1):
            if i % d == 0:
                for f in primes[d]:
                    prod = prod * f
        assert ctx.bracket(i) == prod


def test_factorial_table_recurrences(ctx3):
    t = ctx3.factorials
    t.grow(3)
    A, q = ctx3.A, ctx3.q
    for i in range(1, 4):
        assert t.D[i] == t.brackets[i] * A.pow(t.D[i - 1], q)
        assert t.L[i] == t.brackets[i] * t.L[i - 1]


def test_carlitz_factorial_examples(ctx2):
    A = ctx2.A
    assert ctx2.carlitz_factorial(0) == A.one
    for e in range(4):
        assert ctx2.carlitz_factorial(2 ** e) == ctx2.factorials.D_at(e)
    # q=2, j=3 has digits (1,1): D_0 * D_1 = theta^2 + theta
    assert ctx2.carlitz_factorial(3) == ctx2.theta ** 2 + ctx2.theta


def test_product_of_monics_is_D(ctx2, ctx3):
    # D_i = product of all monic polynomials of degree i, i <= 2
    for ctx in (ctx2, ctx3):
        A = ctx.A
        for i in range(1, 3):
            prod = A.one
            for h in enumerate_monic(A, i):
                prod = prod * h
            assert prod == ctx.factorials.D_at(i)


def test_L_is_lcm_of_monics(ctx2, ctx3):
    # L_i = lcm of all monics of degree <= i (iterated gcd oracle)
    for ctx in (ctx2, ctx3):
        A = ctx.A
        for i in range(1, 3):
            acc = A.one
            for d in range(1, i + 1):
                for h in enumerate_monic(A, d):
                    acc = A.lcm(acc, h)
            assert acc == ctx.factorials.L_at(i)
            for h in enumerate_monic(A, i):
                assert A.divmod(ctx.factorials.L_at(i), h)[1].is_zero()


def test_three_way_factorial_identity(ctx2, ctx3):
    # Pi(q^j - 1) = (D_0...D_{j-1})^(q-1) = D_j/L_j = (-1)^j prod(alpha != 0)
    for ctx in (ctx2, ctx3):
        A, q = ctx.A, ctx.q
        for j in range(1, 4):
            lhs = ctx.carlitz_factorial(q ** j - 1)
            prod_d = A.one
            for t in range(j):
                prod_d = prod_d * ctx.factorials.D_at(t)
            assert lhs == A.pow(prod_d, q - 1)
            ratio = A.exact_div(ctx.factorials.D_at(j), ctx.factorials.L_at(j))
            assert lhs == ratio
            prod_a = A.one
            for alpha in enumerate_below(A, j):
                if not alpha.is_zero():
                    prod_a = prod_a * alpha
            sign = A.one if j % 2 == 0 else A.neg(A.one)
            assert lhs == sign * prod_a


def test_e_family_basics(ctx2):
    Ax = ctx2.Ax
    assert ctx2.e_poly(0) == Ax.gen()          # e_0(x) = x
    e1 = ctx2.e_poly(1)
    assert e1.degree == 2
    # q=2: e_1(theta) = theta(theta - 1) = theta^2 + theta = D_1
    assert ctx2.e_value(1, ctx2.theta) == ctx2.factorials.D_at(1)
    # only q-power monomials appear (F_q-linearity)
    for t in range(3):
        et = ctx2.e_poly(t)
        assert et.degree == 2 ** t
        for i, c in enumerate(et.coeffs):
            if not c.is_zero():
                assert i & (i - 1) == 0 or i == 1  # power of two


def test_e_value_at_monic_is_D(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        for t in range(3):
            for h in enumerate_monic(ctx.A, t):
                assert ctx.e_value(t, h) == ctx.factorials.D_at(t)


def test_e_linearity(ctx2, ctx3, rng):
    for ctx in (ctx2, ctx3):
        A = ctx.A
        for t in range(4):
            for _ in range(6):
                x = rand_apoly(ctx, rng, 4)
                y = rand_apoly(ctx, rng, 4)
                assert ctx.e_value(t, x + y) == ctx.e_value(t, x) + ctx.e_value(t, y)
                for zeta in range(ctx.q):
                    assert ctx.e_value(t, A.scalar_mul(zeta, x)) == \
                        A.scalar_mul(zeta, ctx.e_value(t, x))


def test_family_degrees_and_ratio(ctx2, ctx3):
    # g_j, G_j have degree j; G_j = g_j / Pi(j) coefficientwise
    for ctx in (ctx2, ctx3):
        for j in range(min(ctx.q ** 3, 12)):
            g = ctx.carlitz_poly("g", j).poly
            G = ctx.carlitz_poly("G", j).poly
            gh = ctx.carlitz_poly("ghat", j).poly
            Gh = ctx.carlitz_poly("Ghat", j).poly
            assert g.degree == j and G.degree == j
            assert gh.degree == j and Gh.degree == j
            Pi = ctx.carlitz_factorial(j)
            k = ctx.k
            for c_g, c_G in zip(g.coeffs, G.coeffs):
                assert k.make(c_g, Pi) == c_G


def test_family_value_tables_match_polynomials(ctx2, ctx3, rng):
    for ctx in (ctx2, ctx3):
        count = min(ctx.q ** 3, 16)
        for _ in range(4):
            x0 = rand_apoly(ctx, rng, 2)
            for fam in ("g", "ghat"):
                vals = ctx.family_values(fam, count, x0)
                for j in range(count):
                    f = ctx.carlitz_poly(fam, j).poly
                    assert vals[j] == poly_eval(f, x0)
            for fam in ("G", "Ghat"):
                vals = ctx.family_values(fam, count, x0)
                point = ctx.k.from_poly(x0)
                for j in range(count):
                    f = ctx.carlitz_poly(fam, j).poly
                    assert ctx.k.from_poly(vals[j]) == poly_eval(f, point)


def test_G_integrality(ctx2, ctx3):
    # G_j(alpha) and Ghat_j(alpha) land in A for alpha in A_{<3}, j < q^3
    for ctx in (ctx2, ctx3):
        jmax = ctx.q ** 3
        for alpha in enumerate_below(ctx.A, 3):
            ctx.family_values("G", jmax, alpha)      # raises if division inexact
            ctx.family_values("Ghat", jmax, alpha)


def test_G1_is_identity(ctx2, ctx3, rng):
    for ctx in (ctx2, ctx3):
        for _ in range(5):
            alpha = rand_apoly(ctx, rng, 3)
            assert ctx.family_values("G", 2, alpha)[1] == alpha


def test_zeta_scaling(ctx3, rng):
    # g_j(zeta x) = zeta^j g_j(x), same for the other families
    ctx = ctx3
    A = ctx.A
    for _ in range(4):
        x = rand_apoly(ctx, rng, 2)
        for fam in ("g", "ghat"):
            vals_x = ctx.family_values(fam, 9, x)
            for zeta in range(1, 3):
                vals_zx = ctx.family_values(fam, 9, A.scalar_mul(zeta, x))
                for j in range(9):
                    assert vals_zx[j] == A.scalar_mul(
                        ctx.field.pow(zeta, j), vals_x[j])


def test_dual_generator_identity(ctx2, ctx3):
    # ghat_{q^m - 1}(x) * x = e_m(x) exactly, m <= 3
    for ctx in (ctx2, ctx3):
        Ax = ctx.Ax
        for m in range(1, 4):
            gh = ctx.carlitz_poly("ghat", ctx.q ** m - 1).poly
            assert Ax.mul(gh, Ax.gen()) == ctx.e_poly(m)


def test_dual_vanishing_on_degree_t(ctx2, ctx3):
    # ghat_{(q-1)q^t} vanishes on all polynomials of degree exactly t
    for ctx in (ctx2, ctx3):
        for t in range(2):
            j = (ctx.q - 1) * ctx.q ** t
            for h in enumerate_monic(ctx.A, t):
                for c in range(1, ctx.q):
                    point = ctx.A.scalar_mul(c, h)
                    assert ctx.family_values("ghat", j + 1, point)[j].is_zero()


def test_addition_formulas(ctx2, ctx3, rng):
    # g_j(x+y) = sum binom(j,v) g_v(x) g_w(y), and the dual/mixed versions
    for ctx in (ctx2, ctx3):
        A, p = ctx.A, ctx.p
        jmax = ctx.q ** 3
        for _ in range(3):
            x = rand_apoly(ctx, rng, 2)
            y = rand_apoly(ctx, rng, 2)
            gx = ctx.family_values("g", jmax, x)
            gy = ctx.family_values("g", jmax, y)
            gxy = ctx.family_values("g", jmax, x + y)
            ghx = ctx.family_values("ghat", jmax, x)
            ghy = ctx.family_values("ghat", jmax, y)
            ghxy = ctx.family_values("ghat", jmax, x + y)
            Gx = ctx.family_values("G", jmax, x)
            Gy = ctx.family_values("G", jmax, y)
            Gxy = ctx.family_values("G", jmax, x + y)
            for j in list(range(8)) + [jmax - 1]:
                acc_g = A.zero
                acc_G = A.zero
                acc_gh1 = A.zero
                acc_gh2 = A.zero
                for v in range(j + 1):
                    b = binom_mod(j, v, p)
                    if b:
                        acc_g = acc_g + A.scalar(b, gx[v] * gy[j - v])
                        acc_G = acc_G + A.scalar(b, Gx[v] * Gy[j - v])
                        acc_gh1 = acc_gh1 + A.scalar(b, gx[v] * ghy[j - v])
                        acc_gh2 = acc_gh2 + A.scalar(b, ghx[v] * gy[j - v])
                assert acc_g == gxy[j]
                assert acc_G == Gxy[j]
                assert acc_gh1 == ghxy[j]
                assert acc_gh2 == ghxy[j]


def test_sign_binomial_lemma():
    # binom(q^m - 1, j) = (-1)^j mod p
    from carlitz.basis import CarlitzContext
    for q in (2, 3, 4):
        ctx = CarlitzContext(q)
        p = ctx.p
        for m in range(1, 4):
            top = q ** m - 1
            for j in range(top + 1):
                assert binom_mod(top, j, p) == (1 if j % 2 == 0 else (p - 1) % p)


def test_top_index_addition_sign_variants(ctx3, rng):
    # at j = q^m - 1 the addition formula collapses to plain products with signs
    ctx = ctx3
    A = ctx.A
    m = 2
    j = ctx.q ** m - 1
    for _ in range(3):
        x = rand_apoly(ctx, rng, 2)
        y = rand_apoly(ctx, rng, 2)
        gx = ctx.family_values("g", j + 1, x)
        gy = ctx.family_values("g", j + 1, y)
        Gx = ctx.family_values("G", j + 1, x)
        Gy = ctx.family_values("G", j + 1, y)
        ghy = ctx.family_values("ghat", j + 1, y)
        ghey = ctx.family_values("ghat", j + 1, x)
        ghxy = ctx.family_values("ghat", j + 1, x - y)
        # g_{q^m-1}(x+y) = sum (-1)^e g_e(x) g_f(y);  same shape for G
        acc = A.zero
        accG = A.zero
        for e in range(j + 1):
            term = gx[e] * gy[j - e]
            termG = Gx[e] * Gy[j - e]
            acc = acc + (term if e % 2 == 0 else A.neg(term))
            accG = accG + (termG if e % 2 == 0 else A.neg(termG))
        assert acc == ctx.family_values("g", j + 1, x + y)[j]
        assert accG == ctx.family_values("G", j + 1, x + y)[j]
        # g_{q^m-1}(x-y) = sum g_e(x) g_f(y), no signs
        direct = A.zero
        for e in range(j + 1):
            direct = direct + gx[e] * gy[j - e]
        assert direct == ctx.family_values("g", j + 1, x - y)[j]
        # ghat_{q^m-1}(x-y) = sum g_e(x) ghat_f(y) = sum ghat_e(x) g_f(y)
        acc1 = A.zero
        acc2 = A.zero
        for e in range(j + 1):
            acc1 = acc1 + gx[e] * ghy[j - e]
            acc2 = acc2 + ghey[e] * gy[j - e]
        assert acc1 == ghxy[j]
        assert acc2 == ghxy[j]


def test_frobenius_expand(ctx2, ctx3, rng):
    A2 = ctx2.A
    th = ctx2.theta
    assert ctx2.frobenius_expand(th, 1) == th ** 2          # theta + [1]
    f = th ** 2 + A2.one
    assert ctx2.frobenius_expand(f, 1) == f * f
    for ctx in (ctx2, ctx3):
        for _ in range(5):
            g = rand_apoly(ctx, rng, 4)
            assert ctx.frobenius_expand(g, 0) == g
            assert ctx.frobenius_expand(g, 2) == ctx.A.pow(g, ctx.q ** 2)


def test_matrix_triple(ctx2, ctx3, rng):
    # theta-power columns: unipotent Wronskian, det M = det V
    ctx = ctx2
    A = ctx.A
    m = 2
    xs = [A.pow(ctx.theta, j) for j in range(m + 1)]
    triple = ctx.matrix_triple(xs)
    assert det_bareiss(A, triple.wronskian) == A.one
    assert det_bareiss(A, triple.moore) == det_bareiss(A, triple.vandermonde)
    # a repeated column kills both determinants
    xs_rep = [xs[0], xs[1], xs[1]]
    t2 = ctx.matrix_triple(xs_rep)
    assert det_bareiss(A, t2.moore).is_zero()
    # 20 random tuples across q in {2,3}, m <= 3 (identity asserted inside)
    for ctxq in (ctx2, ctx3):
        for _ in range(10):
            mm = rng.randint(1, 3)
            xs = [rand_apoly(ctxq, rng, mm) for _ in range(mm + 1)]
            ctxq.matrix_triple(xs)


def test_matrix_triple_degree_guard(ctx2):
    with pytest.raises(CarlitzDomainError):
        ctx2.matrix_triple([ctx2.theta ** 3, ctx2.A.one])


def test_vandermonde_factorial(ctx2, ctx3):
    # m x m bracket Vandermonde det = Pi((q^m - 1)/(q - 1)); frozen small case:
    # q=2, m=2: det [[1,0],[1,[1]]] = [1] = theta^2 + theta = Pi(3)
    assert ctx2.vandermonde_factorial(2) == ctx2.theta ** 2 + ctx2.theta
    for ctx in (ctx2, ctx3):
        for m in range(1, 4):
            idx = (ctx.q ** m - 1) // (ctx.q - 1)
            assert ctx.vandermonde_factorial(m) == ctx.carlitz_factorial(idx)


def test_family_cache_guard(ctx2):
    with pytest.raises(IndexGuardError):
        ctx2.carlitz_poly("g", ctx2.q ** 3 + 1)
