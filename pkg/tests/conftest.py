import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from abelcs.matrix import IntMatrix
from abelcs.surgery import SurgeryPresentation, block_sum, lens, m26, sphere

M26_ROWS = [[-3, 1, 1], [1, 3, 1], [1, 1, -1]]


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(n)
        if rows[0][j]
    )


def minors_gcd(rows, k):
    """gcd of all k x k minors."""
    n, m = len(rows), len(rows[0]) if rows else 0
    g = 0
    for ri in itertools.combinations(range(n), k):
        for ci in itertools.combinations(range(m), k):
            g = math.gcd(g, cofactor_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def direct_gauss_sum(phase, box):
    """sum over the box of exp(2 pi i phase(x)) with float arithmetic, term by term."""
    import cmath

    return sum(cmath.exp(2j * math.pi * float(phase(x))) for x in itertools.product(*map(range, box)))


def random_symmetric(rng, max_dim=3, bound=5, nondegenerate=True):
    while True:
        m = rng.randint(1, max_dim)
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(i, m):
                rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
        if not nondegenerate or cofactor_det(rows) != 0:
            return rows


@st.composite
def int_matrices(draw, max_dim=4, bound=9, square=True):
    n = draw(st.integers(0, max_dim))
    m = n if square else draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=n * m, max_size=n * m))
    return IntMatrix(n, m, tuple(entries))


@st.composite
def symmetric_matrices(draw, max_dim=3, bound=5, min_dim=0):
    n = draw(st.integers(min_dim, max_dim))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(st.integers(-bound, bound))
    return IntMatrix.from_rows(rows, n)


@st.composite
def nondegenerate_presentations(draw, max_dim=3, bound=5, min_dim=0):
    L = draw(symmetric_matrices(max_dim=max_dim, bound=bound, min_dim=min_dim))
    from hypothesis import assume

    assume(cofactor_det(L.to_rows()) != 0)
    return SurgeryPresentation(L)


@st.composite
def unimodular_matrices(draw, n, steps=6):
    """Products of elementary integer row operations and signed swaps."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, steps))):
        if n < 2:
            if draw(st.booleans()):
                rows[0] = [-x for x in rows[0]]
            continue
        i, j = draw(st.permutations(range(n)))[:2]
        op = draw(st.sampled_from(["add", "swap", "neg"]))
        if op == "add":
            q = draw(st.integers(-3, 3))
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        elif op == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-x for x in rows[i]]
    return IntMatrix.from_rows(rows, n)


@pytest.fixture
def m26_pres():
    return m26()


CATALOG = {
    "sphere": sphere(),
    "lens2": lens(2),
    "lens3": lens(3),
    "lens7": lens(7),
    "m26": m26(),
    "lens2#lens3": block_sum([lens(2), lens(3)]),
    "lens2#lens2": block_sum([lens(2), lens(2)]),
    "m26#lens4": block_sum([m26(), lens(4)]),
}


@pytest.fixture(params=sorted(CATALOG))
def catalog_pres(request):
    return CATALOG[request.param]


def frac_rows(rows, scale=1):
    return [[Fraction(x, scale) for x in r] for r in rows]
