"""The acceptance suite: ten numbered criteria, each a pass/fail check.

Every criterion re-derives its expectations from independent elementary
computations (brute-force products, lcm by gcd, triangular solves,
pointwise oracles) and compares them with the library's fast paths at
the exact tolerances of the contracts: exact equality in A/k, and
known-zero-to-precision for truncated series.  A fixed seed makes the
whole report byte-reproducible; criterion 10 re-runs the other nine and
compares the rendered bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .basis import CarlitzContext, digit_sum
from .digits import (DigitPermutation, ExtendedActionContext, act_divided_power,
                     act_function, congruence_check, extend_unramified,
                     rho_zp, unit_power_stream)
from .expansion import (BASES, expand, expand_monic, orthogonality_sum,
                        reconstruct_matches)
from .errors import CarlitzError
from .fields import ExtensionField, FqField
from .lseries import (AnglesSumSpec, Verdict, angles_deformed_coefficient,
                      angles_power_sum, angles_vanishing_condition,
                      deformed_valuation_bound, extract_zeros, newton_polygon,
                      sheats_check, trivial_zero_permutation_check,
                      trivial_zero_value, vanishing_degree_bound, zeta_series)
from .measures import (DiracCombination, convolve, convolve_function,
                       dirac_moments, divided_derivative_z, dp_eq, dp_mul,
                       dp_series, hat_transform, tate_eq, wagner_transform)
from .expansion import WagnerExpansion
from .linalg import det_bareiss
from .padic import PadicInteger
from .polys import binom_mod, enumerate_below, enumerate_monic
from .series import LaurentRing, one_unit_power


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _rand_apoly(ctx, rng, max_deg, monic=False):
    deg = rng.randrange(max_deg + 1)
    coeffs = [rng.randrange(ctx.q) for _ in range(deg)]
    coeffs.append(1 if monic else rng.randrange(1, ctx.q))
    return ctx.A.poly(coeffs)


def _rand_perm(q, rng, max_pos=3):
    positions = list(range(max_pos + 1))
    rng.shuffle(positions)
    return DigitPermutation({i: positions[i] for i in range(max_pos + 1)}, q)


# -- criterion 1 -----------------------------------------------------------


def criterion_factorials(ctxs, seed) -> CriterionResult:
    checks = 0
    for q in (2, 3):
        ctx = ctxs[q]
        A = ctx.A
        for i in range(1, 3):
            prod = A.one
            for h in enumerate_monic(A, i):
                prod = prod * h
            if prod != ctx.factorials.D_at(i):
                return CriterionResult(1, "factorial-identities", False,
                                       f"q={q}: D_{i} product mismatch")
            acc = A.one
            for d in range(1, i + 1):
                for h in enumerate_monic(A, d):
                    acc = A.lcm(acc, h)
            if acc != ctx.factorials.L_at(i):
                return CriterionResult(1, "factorial-identities", False,
                                       f"q={q}: L_{i} lcm mismatch")
            checks += 2
        for j in range(1, 4):
            lhs = ctx.carlitz_factorial(q ** j - 1)
            prod_d = A.one
            for t in range(j):
                prod_d = prod_d * ctx.factorials.D_at(t)
            ratio = A.exact_div(ctx.factorials.D_at(j), ctx.factorials.L_at(j))
            prod_a = A.one
            for alpha in enumerate_below(A, j):
                if not alpha.is_zero():
                    prod_a = prod_a * alpha
            sign = A.one if j % 2 == 0 else A.neg(A.one)
            if not (lhs == A.pow(prod_d, q - 1) == ratio == sign * prod_a):
                return CriterionResult(1, "factorial-identities", False,
                                       f"q={q}: three-way equality fails at j={j}")
            checks += 1
        # bracket = product of monic primes of degree dividing i
        for i in range(1, 4):
            prod = A.one
            for d in range(1, i + 1):
                if i % d:
                    continue
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
                        prod = prod * f
            if prod != ctx.bracket(i):
                return CriterionResult(1, "factorial-identities", False,
                                       f"q={q}: bracket factorization fails at {i}")
            checks += 1
    return CriterionResult(1, "factorial-identities", True,
                           f"{checks} exact identities over q in {{2,3}}")


# -- criterion 2 -----------------------------------------------------------


def criterion_determinants(ctxs, seed) -> CriterionResult:
    rng = _rng(seed, "det")
    done = 0
    for _ in range(20):
        q = rng.choice((2, 3))
        ctx = ctxs[q]
        m = rng.randint(1, 3)
        xs = [_rand_apoly(ctx, rng, m) for _ in range(m + 1)]
        try:
            ctx.matrix_triple(xs)   # raises if M != V W
        except CarlitzError as exc:
            return CriterionResult(2, "determinant-identities", False, str(exc))
        done += 1
    for q in (2, 3):
        ctx = ctxs[q]
        for m in (2, 3):
            idx = (q ** m - 1) // (q - 1)
            if ctx.vandermonde_factorial(m) != ctx.carlitz_factorial(idx):
                return CriterionResult(2, "determinant-identities", False,
                                       f"q={q}: Vandermonde formula fails at m={m}")
            done += 1
    return CriterionResult(2, "determinant-identities", True,
                           f"{done} exact matrix identities")


# -- criterion 3 -----------------------------------------------------------


def criterion_expansion(ctxs, seed) -> CriterionResult:
    rng = _rng(seed, "expand")
    trips = 0
    for q in (2, 3):
        ctx = ctxs[q]
        for basis in BASES:
            for _ in range(50):
                deg = rng.randrange(ctx.q ** 2)
                coeffs = [_rand_apoly(ctx, rng, 2) for _ in range(deg + 1)]
                f = ctx.Ax.poly(coeffs)
                ec2 = expand(ctx, f, basis, 2)
                if not reconstruct_matches(ctx, ec2, f):
                    return CriterionResult(3, "expansion-engine", False,
                                           f"q={q} {basis}: round trip fails")
                ec3 = expand(ctx, f, basis, 3)
                if ec2.coeffs != ec3.coeffs:
                    return CriterionResult(3, "expansion-engine", False,
                                           f"q={q} {basis}: level dependence")
                ecm = expand_monic(ctx, f, basis, 2)
                if ecm.coeffs != ec2.coeffs:
                    return CriterionResult(3, "expansion-engine", False,
                                           f"q={q} {basis}: monic sum differs")
                trips += 1
    ctx = ctxs[2]
    k = ctx.k
    for m in range(1, 4):
        top = 2 ** m - 1
        ratio = k.from_poly(ctx.DL_ratio(m))
        if m % 2 == 1:
            ratio = k.neg(ratio)
        for l in range(top + 1):
            for j in range(top + 1):
                want = ratio if l + j == top else k.zero
                if orthogonality_sum(ctx, l, j, m, "below") != want:
                    return CriterionResult(3, "expansion-engine", False,
                                           f"orthogonality fails at {(m, l, j)}")
    return CriterionResult(3, "expansion-engine", True,
                           f"{trips} round trips, orthogonality exhaustive m<=3")


# -- criterion 4 -----------------------------------------------------------


def criterion_measures(ctxs, seed) -> CriterionResult:
    rng = _rng(seed, "measure")
    pairs = 0
    for q in (2, 3):
        ctx = ctxs[q]
        order = q ** 3
        for _ in range(15):
            combos = []
            for _ in range(2):
                pts = tuple((_rand_apoly(ctx, rng, 1), _rand_apoly(ctx, rng, 2))
                            for _ in range(rng.randint(1, 3)))
                combos.append(dirac_moments(ctx, DiracCombination(pts), order))
            mu, nu = combos
            lhs = wagner_transform(convolve(mu, nu))
            rhs = dp_mul(wagner_transform(mu), wagner_transform(nu))
            if not dp_eq(lhs, rhs):
                return CriterionResult(4, "measure-algebra", False,
                                       f"q={q}: transform not multiplicative")
            pairs += 1
        from .measures import MeasureMoments
        A = ctx.A
        for i in range(q ** 2 + 1):
            coeffs = [A.zero] * order
            coeffs[i] = A.one
            gen = MeasureMoments(A, tuple(coeffs))
            f = WagnerExpansion(A, tuple(_rand_apoly(ctx, rng, 2)
                                         for _ in range(order)))
            lhs = hat_transform(convolve_function(gen, f))
            rhs = divided_derivative_z(hat_transform(f), i)
            if not tate_eq(lhs, rhs):
                return CriterionResult(4, "measure-algebra", False,
                                       f"q={q}: differentiation identity i={i}")
    return CriterionResult(4, "measure-algebra", True,
                           f"{pairs} transform pairs, derivation law to i=q^2")


# -- criterion 5 -----------------------------------------------------------


def criterion_digit_actions(ctxs, seed) -> CriterionResult:
    rng = _rng(seed, "digits")
    # six clauses of the digit-stream proposition
    for q in (2, 3):
        p = ctxs[q].p
        rho = _rand_perm(q, rng)
        inv = rho.inverse()
        for _ in range(40):
            n = rng.randint(-300, 300)
            y = PadicInteger.from_int(n, q)
            if rho_zp(inv, rho_zp(rho, y)) != y:
                return CriterionResult(5, "digit-permutation-suite", False,
                                       "stream action is not bijective")
            if (n >= 0) != (rho_zp(rho, y).to_int() >= 0):
                return CriterionResult(5, "digit-permutation-suite", False,
                                       "sign stability fails")
        for _ in range(40):
            a = rng.randrange(q ** 5)
            b = 0
            for j in range(5):
                if (a // q ** j) % q == 0:
                    b += rng.randrange(q) * q ** j
            if rho.act_index(a + b) != rho.act_index(a) + rho.act_index(b):
                return CriterionResult(5, "digit-permutation-suite", False,
                                       "carry-free additivity fails")
        for n in range(0, 257, 3):
            img = rho.act_index(n)
            if digit_sum(n, q) != digit_sum(img, q):
                return CriterionResult(5, "digit-permutation-suite", False,
                                       "digit sum not preserved")
            if q > 2 and (n - img) % (q - 1):
                return CriterionResult(5, "digit-permutation-suite", False,
                                       "mod q-1 congruence fails")
        for n in range(257):
            rn = rho.act_index(n)
            for j in range(0, 257, 5):
                if binom_mod(n, j, p) != binom_mod(rn, rho.act_index(j), p):
                    return CriterionResult(5, "digit-permutation-suite", False,
                                           "binomial congruence fails")
    # divided-power multiplicativity, 100 random pairs
    for _ in range(100):
        q = rng.choice((2, 3))
        ctx = ctxs[q]
        rho = _rand_perm(q, rng, 2)
        order = rho.block_size()
        a = dp_series(ctx.field, [rng.randrange(q) for _ in range(order)])
        b = dp_series(ctx.field, [rng.randrange(q) for _ in range(order)])
        lhs = act_divided_power(rho, dp_mul(a, b))
        rhs = dp_mul(act_divided_power(rho, a), act_divided_power(rho, b))
        if not dp_eq(lhs, rhs):
            return CriterionResult(5, "digit-permutation-suite", False,
                                   "divided-power action not multiplicative")
    # the multinomial congruence, 50 random triples
    for _ in range(50):
        q = rng.choice((2, 3))
        rho = _rand_perm(q, rng)
        m, n = rng.randrange(2 ** 12), rng.randrange(2 ** 12)
        if not congruence_check(rho, m, n):
            return CriterionResult(5, "digit-permutation-suite", False,
                                   f"multinomial congruence fails at {(m, n)}")
    # extended action: basis independence over F_4 and F_9
    for q in (2, 3):
        ext = ExtensionField(FqField(q), 2)
        ring = LaurentRing(ext, "pi")
        w = ext.gen()
        a1 = ExtendedActionContext(ring, (ext.one, w))
        a2 = ExtendedActionContext(ring, (ext.one, ext.add(w, ext.one)))
        for _ in range(20):
            rho = _rand_perm(q, rng, 2)
            beta = ring.make(rng.randint(-3, 0),
                             [rng.randrange(ext.q) for _ in range(9)], None)
            if extend_unramified(a1, rho, beta) != extend_unramified(a2, rho, beta):
                return CriterionResult(5, "digit-permutation-suite", False,
                                       f"extended action depends on basis (q={q})")
    return CriterionResult(5, "digit-permutation-suite", True,
                           "six stream clauses, 100 ring pairs, 50 congruences, "
                           "40 extension points")


# -- criterion 6 -----------------------------------------------------------


def criterion_zeta_zeros(ctxs, seed) -> CriterionResult:
    N = 32
    series_count = 0
    for q in (2, 3):
        ctx = ctxs[q]
        for i in range(1, 11):
            Z = zeta_series(ctx, -i, 6)
            bound = vanishing_degree_bound(ctx, i)
            for d in range(bound + 1, 7):
                if not Z.coeffs[d].is_exact_zero():
                    return CriterionResult(6, "zeta-zero-structure", False,
                                           f"q={q} y=-{i}: z_{d} not exactly zero")
            P = newton_polygon(Z)
            if sheats_check(P) is not Verdict.TRUE:
                return CriterionResult(6, "zeta-zero-structure", False,
                                       f"q={q} y=-{i}: polygon not certified")
            zeros = extract_zeros(ctx, Z, P, prec=N)
            if len(zeros) != len(P.segments):
                return CriterionResult(6, "zeta-zero-structure", False,
                                       f"q={q} y=-{i}: zero count mismatch")
            for z in zeros:
                if z.residual_valuation < N - 2:
                    return CriterionResult(6, "zeta-zero-structure", False,
                                           f"q={q} y=-{i}: residual {z.residual_valuation}")
            series_count += 1
    return CriterionResult(6, "zeta-zero-structure", True,
                           f"{series_count} series, all polygons certified, "
                           f"residuals >= {N - 2}")


# -- criterion 7 -----------------------------------------------------------


def criterion_trivial_zeros(ctxs, seed) -> CriterionResult:
    rng = _rng(seed, "trivzero")
    for q in (2, 3, 4):
        ctx = ctxs[q]
        for i in range(1, 13):
            value = trivial_zero_value(ctx, i)
            should_vanish = (i % (q - 1) == 0) if q > 2 else True
            if value.is_zero() != should_vanish:
                return CriterionResult(7, "trivial-zeroes", False,
                                       f"q={q}: value at {i} wrong")
    for _ in range(10):
        q = rng.choice((2, 3))
        ctx = ctxs[q]
        rho = _rand_perm(q, rng)
        i = (q - 1) * rng.randint(1, 12 // (q - 1))
        if not trivial_zero_permutation_check(ctx, rho, i):
            return CriterionResult(7, "trivial-zeroes", False,
                                   f"q={q}: permutation check fails at {i}")
    return CriterionResult(7, "trivial-zeroes", True,
                           "iff law to i=12 over q in {2,3,4}, 10 permuted pairs")


# -- criterion 8 -----------------------------------------------------------


def criterion_angles(ctxs, seed) -> CriterionResult:
    import itertools
    rng = _rng(seed, "angles")
    ctx = ctxs[2]
    vanished = 0
    for d in range(1, 4):
        for n in (1, 2):
            for ms in itertools.product(range(1, 8), repeat=n):
                if not angles_vanishing_condition(ctx, d, ms):
                    continue
                if not angles_power_sum(ctx, AnglesSumSpec(d, ms)).is_zero():
                    return CriterionResult(8, "angles-sums", False,
                                           f"power sum d={d} m={ms} nonzero")
                vanished += 1
    for q in (2, 3):
        ctx = ctxs[q]
        head = [rng.randrange(q) for _ in range(24)]
        y = PadicInteger(q, head, 0)
        for n, idx in ((1, (1,)), (2, (1, 2))):
            last_definite = None
            for d in range(1, 7):
                v = angles_deformed_coefficient(ctx, d, y, idx, prec=32)
                lb = v.val_lower_bound()
                bound = deformed_valuation_bound(ctx, d, n)
                if bound is not None and lb is not None and lb < bound:
                    return CriterionResult(8, "angles-sums", False,
                                           f"q={q} n={n} d={d}: bound violated")
                if v.coeffs:
                    if last_definite is not None and lb < last_definite:
                        return CriterionResult(8, "angles-sums", False,
                                               f"q={q} n={n} d={d}: valuation drops")
                    last_definite = lb
    return CriterionResult(8, "angles-sums", True,
                           f"{vanished} exact vanishings, growth bounds to d=6")


# -- criterion 9 -----------------------------------------------------------


def criterion_dirichlet_shadow(ctxs, seed) -> CriterionResult:
    N = 32
    ctx = ctxs[2]
    kinf = ctx.kinf
    u = kinf.one + kinf.uniformizer()
    f = unit_power_stream(kinf, u, N)
    rho = DigitPermutation.swap(0, 1, 2)
    g = act_function(rho, f)
    for kk in range(17):
        y = PadicInteger.from_int(4 * kk, 2)
        if not (g.evaluate(y, 2) - f.evaluate(y, 2)).truncate(N).is_known_zero():
            return CriterionResult(9, "dirichlet-shadow", False,
                                   f"streams differ at y={4 * kk}")
        direct = one_unit_power(u, y, prec=N)
        if not (f.evaluate(y, 2) - direct).truncate(N).is_known_zero():
            return CriterionResult(9, "dirichlet-shadow", False,
                                   f"stream disagrees with direct power at {4 * kk}")
    y1 = PadicInteger.from_int(1, 2)
    if (g.evaluate(y1, 2) - f.evaluate(y1, 2)).truncate(N).is_known_zero():
        return CriterionResult(9, "dirichlet-shadow", False,
                               "relabeled stream failed to differ at y=1")
    return CriterionResult(9, "dirichlet-shadow", True,
                           "17 agreement points on 4Z, difference at y=1")


# -- assembly ----------------------------------------------------------------


_CRITERIA = (
    criterion_factorials,
    criterion_determinants,
    criterion_expansion,
    criterion_measures,
    criterion_digit_actions,
    criterion_zeta_zeros,
    criterion_trivial_zeros,
    criterion_angles,
    criterion_dirichlet_shadow,
)


def _contexts() -> dict[int, CarlitzContext]:
    return {q: CarlitzContext(q) for q in (2, 3, 4)}


def run_core(seed: int = 0) -> list[CriterionResult]:
    ctxs = _contexts()
    return [fn(ctxs, seed) for fn in _CRITERIA]


def render_report(results, seed: int) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.number:2d} {r.name:<24s} {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"RESULT {passed}/{len(results)} criteria passed (seed={seed})")
    return "\n".join(lines) + "\n"


def run_all(seed: int = 0) -> list[CriterionResult]:
    """All ten criteria; the tenth re-runs the rest and compares bytes."""
    results = run_core(seed)
    second = run_core(seed)
    deterministic = render_report(results, seed) == render_report(second, seed)
    results.append(CriterionResult(
        10, "report-determinism", deterministic,
        "two runs with one seed rendered identical bytes" if deterministic
        else "reports differ between runs"))
    return results
