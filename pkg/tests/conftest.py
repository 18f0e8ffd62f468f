"""Independent brute-force oracles used across the suite.

None of these reuse the library's closure, BFS or Smith-form code paths.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import settings

from flagbundle.diagrams import DynkinDiagram, parse_diagram

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SMALL = ["A1", "A2", "A3", "B2", "C3", "B3", "G2", "A1+A1", "A1+G2", "D4"]


def reflect_root(c, beta, i):
    k = len(c)
    pair = sum(beta[j] * c[j][i] for j in range(k))
    out = list(beta)
    out[i] -= pair
    return tuple(out)


def orbit_roots(c) -> set[tuple[int, ...]]:
    """Phi = W . Delta, by saturating the simple roots under simple reflections."""
    k = len(c)
    found = {tuple(int(i == j) for j in range(k)) for i in range(k)}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(k):
                r = reflect_root(c, beta, i)
                if r not in found:
                    found.add(r)
                    nxt.append(r)
        frontier = nxt
    return found


def mat_mul(a, b):
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))) for i in range(len(a)))


def reflection_matrix(c, i):
    k = len(c)
    return tuple(
        tuple((int(r == j) - (c[j][i] if r == i else 0)) for j in range(k)) for r in range(k)
    )


def cayley_lengths(c) -> dict:
    """Word length of every group element by BFS in the Cayley graph (matrix keyed)."""
    k = len(c)
    gens = [reflection_matrix(c, i) for i in range(k)]
    e = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    dist = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mat_mul(m, g)
                if p not in dist:
                    dist[p] = dist[m] + 1
                    nxt.append(p)
        frontier = nxt
    return dist


def ssyt_count(shape: list[int], n: int) -> int:
    """Number of semistandard tableaux of a partition shape with entries in 1..n."""
    cells = [(r, col) for r, length in enumerate(shape) for col in range(length)]
    filling: dict = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, col = cells[idx]
        lo = 1
        if col > 0:
            lo = max(lo, filling[(r, col - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, col)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(r, col)] = v
            total += fill(idx + 1)
        filling.pop((r, col), None)
        return total

    return fill(0)


def sl_dimension(lam: tuple[int, ...]) -> int:
    """Dimension of the SL(n+1) irrep with fundamental-weight coordinates lam."""
    n = len(lam)
    shape = [sum(lam[i:]) for i in range(n)]
    return ssyt_count([s for s in shape if s], n + 1)


def rational_solve(a, b):
    """Unique rational solution of a nonsingular square system."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        m[col] = [x / m[col][col] for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def boxes(k: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=k)


@pytest.fixture(params=SMALL)
def small_diagram(request) -> DynkinDiagram:
    return parse_diagram(request.param)
