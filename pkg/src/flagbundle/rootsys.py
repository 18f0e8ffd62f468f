"""Positive roots and coroots by root-string closure, and the b/c coefficient vectors.

Roots live in simple-root coordinates, coroots in simple-coroot coordinates,
weights in fundamental-weight coordinates. With ``C[i][j] = <alpha_i, alpha_j^vee>``:

* ``<beta, gamma^vee> = beta^T C gamma`` for a root and a coroot;
* a weight ``lam`` pairs with a coroot by the plain dot product.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .diagrams import DynkinDiagram, Matrix, cartan_matrix, check_cartan
from .errors import IndexOutOfRangeError, NotConnectedError, RankMismatchError, RootSystemError

Vector = tuple[int, ...]


def _closure(c: Matrix) -> list[Vector]:
    """Positive roots of the Cartan matrix ``c`` by alpha_i-string extension.

    For a positive root ``beta != alpha_i`` the alpha_i-string through beta is
    ``beta - p alpha_i, ..., beta + q alpha_i`` with ``p - q = <beta, alpha_i^vee>``;
    p is read off from roots already found at lower height.
    """
    k = len(c)
    simple = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    found: set[Vector] = set(simple)
    level = list(simple)
    bound = 2 * k * k + 120
    while level:
        nxt: list[Vector] = []
        for beta in level:
            for i in range(k):
                if beta == simple[i]:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * c[j][i] for j in range(k))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        if len(found) > bound:
            raise RootSystemError(f"root closure exceeded {bound} roots; Cartan matrix is not of finite type")
        level = nxt
    return sorted(found, key=lambda v: (sum(v), tuple(-x for x in v)))


@dataclass(frozen=True)
class RootSystem:
    cartan: Matrix
    positive_roots: tuple[Vector, ...]
    positive_coroots: tuple[Vector, ...]
    diagram: DynkinDiagram | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64).reshape(self.rank, self.rank)

    @cached_property
    def roots_array(self) -> np.ndarray:
        return np.array(self.positive_roots, dtype=np.int64).reshape(-1, self.rank)

    @cached_property
    def coroots_array(self) -> np.ndarray:
        return np.array(self.positive_coroots, dtype=np.int64).reshape(-1, self.rank)

    @cached_property
    def _root_set(self) -> frozenset[Vector]:
        return frozenset(self.positive_roots)

    def is_root(self, v: Iterable[int]) -> bool:
        t = tuple(int(x) for x in v)
        return t in self._root_set or tuple(-x for x in t) in self._root_set

    def is_positive_root(self, v: Iterable[int]) -> bool:
        return tuple(int(x) for x in v) in self._root_set

    def coroot_of(self, beta: Vector) -> Vector:
        return self.positive_coroots[self.positive_roots.index(tuple(beta))]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRangeError(f"node index {i} outside 1..{self.rank}")

    def check_subset(self, s: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(i) for i in s)
        for i in out:
            self.check_index(i)
        return out


def _align_coroots(c: Matrix, roots: list[Vector], coroots: list[Vector]) -> tuple[Vector, ...]:
    """Order ``coroots`` to match ``roots`` by transporting (alpha_i, alpha_i^vee) pairs
    along simple reflections; every coroot reached must belong to the dual closure."""
    k = len(c)
    pairs: dict[Vector, Vector] = {}
    frontier = []
    for i in range(k):
        e = tuple(int(i == j) for j in range(k))
        pairs[e] = e
        frontier.append((e, e))
    root_set = set(roots)
    coroot_set = set(coroots)
    while frontier:
        nxt = []
        for beta, gamma in frontier:
            for i in range(k):
                b_pair = sum(beta[j] * c[j][i] for j in range(k))
                g_pair = sum(c[i][j] * gamma[j] for j in range(k))
                nb = list(beta)
                nb[i] -= b_pair
                ng = list(gamma)
                ng[i] -= g_pair
                nb_t, ng_t = tuple(nb), tuple(ng)
                if nb_t in root_set and nb_t not in pairs:
                    if ng_t not in coroot_set:
                        raise RootSystemError(f"coroot {ng_t} of root {nb_t} missing from dual closure")
                    pairs[nb_t] = ng_t
                    nxt.append((nb_t, ng_t))
        frontier = nxt
    if set(pairs) != root_set or set(pairs.values()) != coroot_set:
        raise RootSystemError("root/coroot alignment failed")
    return tuple(pairs[b] for b in roots)


def from_cartan(c, diagram: DynkinDiagram | None = None) -> RootSystem:
    """Root system of an arbitrary (validated) Cartan matrix."""
    mat = check_cartan(c)
    roots = _closure(mat)
    transposed = tuple(tuple(mat[j][i] for j in range(len(mat))) for i in range(len(mat)))
    coroots = _closure(transposed)
    if len(roots) != len(coroots):
        raise RootSystemError("root and coroot closures differ in size")
    aligned = _align_coroots(mat, roots, coroots)
    return RootSystem(mat, tuple(roots), aligned, diagram)


@lru_cache(maxsize=None)
def generate(d: DynkinDiagram) -> RootSystem:
    return from_cartan(cartan_matrix(d), d)


def positive_subsystem(rs: RootSystem, s: Iterable[int]) -> list[Vector]:
    """Positive roots supported on the (1-based) nodes in ``s``."""
    support = rs.check_subset(s)
    return [b for b in rs.positive_roots if all(x == 0 or (t + 1) in support for t, x in enumerate(b))]


def _sum(vectors: list[Vector], k: int) -> Vector:
    return tuple(sum(v[t] for v in vectors) for t in range(k))


def b_coefficients(d: DynkinDiagram | RootSystem) -> Vector:
    """Coordinates of the sum of all positive roots in the simple-root basis."""
    rs = d if isinstance(d, RootSystem) else generate(d)
    return _sum(list(rs.positive_roots), rs.rank)


def c_coefficients(d: DynkinDiagram | RootSystem, I: Iterable[int]) -> Vector:
    """Coordinates of the sum of the positive roots generated by the nodes outside ``I``."""
    rs = d if isinstance(d, RootSystem) else generate(d)
    inside = rs.check_subset(I)
    rest = [t for t in range(1, rs.rank + 1) if t not in inside]
    return _sum(positive_subsystem(rs, rest), rs.rank)


def pairing(lam: Iterable[int], cv: Iterable[int]) -> int:
    a, b = tuple(lam), tuple(cv)
    if len(a) != len(b):
        raise RankMismatchError(f"rank mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def root_coroot_pairing(rs: RootSystem, beta: Iterable[int], gamma: Iterable[int]) -> int:
    """<beta, gamma^vee> for beta in root coordinates and gamma in coroot coordinates."""
    b, g = tuple(beta), tuple(gamma)
    if len(b) != rs.rank or len(g) != rs.rank:
        raise RankMismatchError("rank mismatch")
    return sum(b[i] * rs.cartan[i][j] * g[j] for i in range(rs.rank) for j in range(rs.rank))


def highest_root(d: DynkinDiagram) -> Vector:
    if not d.is_connected:
        raise NotConnectedError(f"{d} is not connected")
    roots = generate(d).positive_roots
    # the maximum dominates every other root coordinate-wise
    top =[b for b in roots if all(all(x >= y for x, y in zip(b, other)) for other in roots)]
    if len(top) != 1:
        raise RootSystemError(f"no unique highest root for {d}")
    return top[0]
