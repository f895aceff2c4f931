"""Shared code fixtures: the classical ingredients used across the suite."""

from __future__ import annotations

import itertools
import time

import pytest

from stabforge.code import additive_code, linear_code, symplectic_code, symplectic_pair
from stabforge.gf import field_make
from stabforge.statevec import GeneratorSet

SESSION_START = time.monotonic()


def pytest_collection_modifyitems(config, items):
    # the wall-clock acceptance criterion must observe the whole session
    tail = [it for it in items if "criterion_10" in it.name]
    rest = [it for it in items if "criterion_10" not in it.name]
    items[:] = rest + tail


def random_generator_set(n, g, rng) -> GeneratorSet:
    """Random independent pairwise-commuting generator rows, by rejection."""
    from stabforge import fmatrix

    f2 = field_make(2, 1)
    rows: list[tuple[int, ...]] = []
    while len(rows) < g:
        cand = tuple(rng.randrange(2) for _ in range(2 * n))
        if not any(cand):
            continue
        if any(symplectic_pair(f2, cand, r) for r in rows):
            continue
        if fmatrix.rank(fmatrix.matrix(f2, rows + [cand], 2 * n)) != len(rows) + 1:
            continue
        rows.append(cand)
    phases = tuple(sum(r[i] & r[n + i] for i in range(n)) % 2 for r in rows)
    return GeneratorSet(n=n, rows=tuple(rows), phases=phases)

EX512_ROWS = (
    (1, 1, 0, 0, 0, 0, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 1, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 1, 1, 1, 0, 1, 0, 0),
)

HAMMING74_ROWS = (
    (1, 0, 0, 0, 0, 1, 1),
    (0, 1, 0, 0, 1, 0, 1),
    (0, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 1, 1, 1, 1),
)

HEXACODE_ROWS = (
    (1, 0, 0, 1, 2, 2),
    (0, 1, 0, 2, 1, 2),
    (0, 0, 1, 2, 2, 1),
)


def even_weight_rows(n):
    return [tuple(1 if j in (i, i + 1) else 0 for j in range(n)) for i in range(n - 1)]


def reed_muller_rows(r, m):
    """Evaluation vectors of monomials of degree <= r on F_2^m."""
    points = list(itertools.product((0, 1), repeat=m))
    rows = []
    for deg in range(r + 1):
        for support in itertools.combinations(range(m), deg):
            rows.append(tuple(int(all(p[i] for i in support)) for p in points))
    return rows


@pytest.fixture(scope="session")
def f2():
    return field_make(2, 1)


@pytest.fixture(scope="session")
def f3():
    return field_make(3, 1)


@pytest.fixture(scope="session")
def f4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def ex512(f2):
    return symplectic_code(f2, EX512_ROWS)


@pytest.fixture(scope="session")
def hamming74(f2):
    return linear_code(f2, HAMMING74_ROWS)


@pytest.fixture(scope="session")
def simplex73(f2):
    return linear_code(
        f2, [(0, 0, 0, 1, 1, 1, 1), (0, 1, 1, 0, 0, 1, 1), (1, 0, 1, 0, 1, 0, 1)]
    )


@pytest.fixture(scope="session")
def even432(f2):
    return linear_code(f2, even_weight_rows(4))


@pytest.fixture(scope="session")
def even762(f2):
    return linear_code(f2, even_weight_rows(7))


@pytest.fixture(scope="session")
def hexacode(f4):
    return linear_code(f4, HEXACODE_ROWS)


@pytest.fixture(scope="session")
def hexacode_additive(f4):
    return additive_code(f4, [r for row in HEXACODE_ROWS for r in (row, tuple(f4.mul(2, x) for x in row))])
