"""Dynkin diagrams of finite type, their Cartan matrices, and recognition.

Node numbering inside each component is Bourbaki's (equivalently Humphreys'):

* ``B_n``: ``alpha_n`` is the short simple root;
* ``C_n``: ``alpha_n`` is the long simple root;
* ``D_n``: chain ``1..n-1`` with node ``n`` attached to ``n-2``;
* ``E_n``: chain ``1-3-4-...-n`` with node ``2`` attached to ``4``;
* ``F_4``: ``alpha_1, alpha_2`` long, ``alpha_3, alpha_4`` short;
* ``G_2``: ``alpha_1`` short.

The Cartan matrix convention is ``C[i][j] = <alpha_i, alpha_j^vee>``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvalidDiagramError, NotACartanMatrixError

Matrix = tuple[tuple[int, ...], ...]

FAMILIES = "ABCDEFG"
_TOKEN = re.compile(r"([A-Ga-g])([0-9]+)")


def valid_type(family: str, rank: int) -> bool:
    if family in "ABC":
        return rank >= 1
    if family == "D":
        return rank >= 3
    if family == "E":
        return 6 <= rank <= 8
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True)
class DynkinDiagram:
    """Ordered product of simple components; global nodes are numbered 1..rank."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        comps = tuple((str(f).upper(), int(r)) for f, r in self.components)
        for family, rank in comps:
            if not valid_type(family, rank):
                raise InvalidDiagramError(f"invalid type {family}{rank}")
        object.__setattr__(self, "components", comps)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def spec(self) -> str:
        return "+".join(f"{f}{r}" for f, r in self.components)

    def __str__(self) -> str:
        return self.spec or "(empty)"

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Global 1-based node indices of each component."""
        out = []
        start = 1
        for _, r in self.components:
            out.append(tuple(range(start, start + r)))
            start += r
        return tuple(out)

    def component_of(self, node: int) -> int:
        for c, block in enumerate(self.blocks):
            if node in block:
                return c
        raise IndexError(node)


def parse_diagram(spec: str) -> DynkinDiagram:
    """Parse ``"A3"``, ``"a1+G2"`` and similar specs."""
    if not isinstance(spec, str) or not spec:
        raise InvalidDiagramError(f"empty diagram spec {spec!r}")
    comps = []
    for token in spec.split("+"):
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise InvalidDiagramError(f"malformed token {token!r} in {spec!r}")
        family, rank = m.group(1).upper(), int(m.group(2))
        if not valid_type(family, rank):
            raise InvalidDiagramError(f"invalid rank: {family}{rank}")
        comps.append((family, rank))
    return DynkinDiagram(tuple(comps))


def _simple_block(family: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, a: int = -1, b: int = -1) -> None:
        # 1-based nodes: C[i][j] = a, C[j][i] = b
        c[i - 1][j - 1] = a
        c[j - 1][i - 1] = b

    if family == "A":
        for i in range(1, n):
            link(i, i + 1)
    elif family == "B":
        for i in range(1, n - 1):
            link(i, i + 1)
        if n >= 2:
            link(n - 1, n, -2, -1)
    elif family == "C":
        for i in range(1, n - 1):
            link(i, i + 1)
        if n >= 2:
            link(n - 1, n, -1, -2)
    elif family == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif family == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif family == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif family == "G":
        link(1, 2, -1, -3)
    return c


def cartan_matrix(d: DynkinDiagram) -> Matrix:
    """Block-diagonal Cartan matrix ``C[i][j] = <alpha_i, alpha_j^vee>``."""
    k = d.rank
    c = [[0] * k for _ in range(k)]
    off = 0
    for family, n in d.components:
        block = _simple_block(family, n)
        for i in range(n):
            for j in range(n):
                c[off + i][off + j] = block[i][j]
        off += n
    return tuple(tuple(row) for row in c)


def determinant(m) -> int:
    """Exact determinant of a square integer matrix (fraction-free Gauss)."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for j in range(col, n):
                    a[r][j] -= f * a[col][j]
    assert det.denominator == 1
    return int(det)


def check_cartan(m) -> Matrix:
    """Validate the Cartan-matrix axioms; returns the matrix as nested tuples."""
    try:
        mat = tuple(tuple(int(x) for x in row) for row in m)
    except (TypeError, ValueError) as exc:
        raise NotACartanMatrixError(f"not an integer matrix: {exc}") from None
    k = len(mat)
    if k == 0 or any(len(row) != k for row in mat):
        raise NotACartanMatrixError("matrix must be square and nonempty")
    for i in range(k):
        if mat[i][i] != 2:
            raise NotACartanMatrixError(f"diagonal entry ({i + 1},{i + 1}) is {mat[i][i]}, expected 2")
        for j in range(k):
            if i == j:
                continue
            a, b = mat[i][j], mat[j][i]
            if a > 0:
                raise NotACartanMatrixError(f"positive off-diagonal entry at ({i + 1},{j + 1})")
            if (a == 0) != (b == 0):
                raise NotACartanMatrixError(f"asymmetric zero pattern at ({i + 1},{j + 1})")
            if a * b not in (0, 1, 2, 3):
                raise NotACartanMatrixError(f"product C_ij*C_ji = {a * b} at ({i + 1},{j + 1})")
    if determinant(mat) == 0:
        raise NotACartanMatrixError("matrix is singular")
    return mat


def canonical_diagram(d: DynkinDiagram) -> DynkinDiagram:
    """Identify the low-rank coincidences B1=C1=A1, C2=B2, D3=A3 and sort components."""
    alias = {("B", 1): ("A", 1), ("C", 1): ("A", 1), ("C", 2): ("B", 2), ("D", 3): ("A", 3)}
    comps = [alias.get(c, c) for c in d.components]
    return DynkinDiagram(tuple(sorted(comps, key=lambda c: (FAMILIES.index(c[0]), c[1]))))


def _candidates(n: int) -> list[tuple[str, int]]:
    out = [("A", n)]
    if n >= 2:
        out.append(("B", n))
    if n >= 3:
        out.append(("C", n))
    if n >= 4:
        out.append(("D", n))
    if 6 <= n <= 8:
        out.append(("E", n))
    if n == 4:
        out.append(("F", 4))
    if n == 2:
        out.append(("G", 2))
    return out


def _match(target: Matrix, sub: Matrix, nodes: list[int]) -> tuple[int, ...] | None:
    """Find ordering p of ``nodes`` with sub[p[i]][p[j]] == target[i][j] (backtracking)."""
    n = len(nodes)
    chosen: list[int] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        for v in nodes:
            if v in chosen:
                continue
            if all(sub[v][chosen[j]] == target[i][j] and sub[chosen[j]][v] == target[j][i] for j in range(i)):
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def classify_cartan(m) -> tuple[DynkinDiagram, tuple[int, ...]]:
    """Recognize a Cartan matrix up to simultaneous row/column permutation.

    Returns ``(diagram, perm)`` with components in canonical order and
    ``m[perm[i]][perm[j]] == cartan_matrix(diagram)[i][j]`` (0-based indices).
    """
    mat = check_cartan(m)
    k = len(mat)
    # connected components of the Coxeter graph
    seen: set[int] = set()
    comps: list[list[int]] = []
    for s in range(k):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(k):
                if u != v and mat[v][u] != 0 and u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))

    found: list[tuple[tuple[str, int], tuple[int, ...]]] = []
    for comp in comps:
        for typ in _candidates(len(comp)):
            perm = _match(cartan_matrix(DynkinDiagram((typ,))), mat, comp)
            if perm is not None:
                found.append((typ, perm))
                break
        else:
            raise NotACartanMatrixError(f"component on nodes {[v + 1 for v in comp]} matches no finite type")
    found.sort(key=lambda f: (FAMILIES.index(f[0][0]), f[0][1], f[1]))
    diagram = DynkinDiagram(tuple(t for t, _ in found))
    perm = tuple(itertools.chain.from_iterable(p for _, p in found))
    return diagram, perm


def all_diagrams(max_rank: int, connected_only: bool = False) -> list[DynkinDiagram]:
    """Every connected type of rank <= max_rank, plus (optionally) all products."""
    simple = [(f, n) for n in range(1, max_rank + 1) for f in FAMILIES if valid_type(f, n)]
    if connected_only:
        return [DynkinDiagram((t,)) for t in simple]
    out: list[DynkinDiagram] = []

    def grow(prefix: list[tuple[str, int]], start: int, budget: int) -> None:
        if prefix:
            out.append(DynkinDiagram(tuple(prefix)))
        for idx in range(start, len(simple)):
            t = simple[idx]
            if t[1] <= budget:
                grow(prefix + [t], idx, budget - t[1])

    grow([], 0, max_rank)
    return out
