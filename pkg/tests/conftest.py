import random

import pytest

from carlitz.basis import CarlitzContext


@pytest.fixture(scope="session")
def ctx2():
    return CarlitzContext(2)


@pytest.fixture(scope="session")
def ctx3():
    return CarlitzContext(3)


@pytest.fixture(scope="session")
def ctx4():
    return CarlitzContext(4)


@pytest.fixture()
def rng():
    return random.Random(20260809)


def rand_apoly(ctx, rng, max_deg, monic=False, nonzero=False):
    q = ctx.q
    while True:
        deg = rng.randrange(max_deg + 1)
        coeffs = [rng.randrange(q) for _ in range(deg)]
        coeffs.append(1 if monic else rng.randrange(1, q))
        f = ctx.A.poly(coeffs)
        if nonzero and f.is_zero():
            continue
        return f
