import math
import random

from hypothesis import strategies as st

from tightsfs.slopes import Mat2, canonical


def random_sl2(rng: random.Random, bound: int = 50) -> Mat2:
    """Uniform-ish det-1 matrix with entries in [-bound, bound]."""
    while True:
        a, c = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if math.gcd(a, c) != 1:
            continue
        # a*d - b*c = 1 has solutions (b0 + t a, d0 + t c)
        if c == 0:
            b0, d0 = 0, a
        else:
            d0 = pow(a, -1, abs(c)) if abs(c) > 1 else 0
            b0 = (a * d0 - 1) // c
        sols = []
        for t in range(-2 * bound, 2 * bound + 1):
            b, d = b0 + t * a, d0 + t * c
            if abs(b) <= bound and abs(d) <= bound:
                sols.append((b, d))
        if sols:
            b, d = rng.choice(sols)
            return Mat2(a, b, c, d)


@st.composite
def sl2_matrices(draw, bound=50):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_sl2(random.Random(seed), bound)


@st.composite
def slopes(draw, bound=10**6):
    p = draw(st.integers(-bound, bound))
    q = draw(st.integers(0, bound))
    if p == 0 and q == 0:
        q = 1
    return canonical(p, q)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
