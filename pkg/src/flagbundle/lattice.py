"""Isogeny lattices, the tagging map, and tag admissibility.

Cocycles are written in fundamental-coweight coordinates. In those
coordinates the tagging map is the identity on coordinates, so all the
content sits in the lattice ``L`` with ``Q^vee <= L <= P^vee``:

* ``ADJOINT``: ``L = P^vee`` (basis = identity), every tag admissible;
* ``SIMPLY_CONNECTED``: ``L = Q^vee`` (basis = Cartan matrix, columns are the
  simple coroots), index ``|det C|``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .diagrams import DynkinDiagram, Matrix, cartan_matrix, determinant
from .errors import LatticeError, RankMismatchError

ADJOINT = "adjoint"
SIMPLY_CONNECTED = "sc"


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Return ``(diag, U, V)`` with ``U @ A @ V = diag(diag)``, ``U``, ``V`` unimodular,
    and each nonzero invariant factor dividing the next."""
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        s[dst] = [x + f * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in s:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, m):
                q = s[i][t] // s[t][t]
                if q:
                    add_row(i, t, -q)
                dirty |= s[i][t] != 0
            for j in range(t + 1, n):
                q = s[t][j] // s[t][t]
                if q:
                    add_col(j, t, -q)
                dirty |= s[t][j] != 0
            if dirty:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % s[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return [s[i][i] for i in range(min(m, n))], u, v


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution ``x`` of ``A x = b``, or None."""
    diag, u, v = smith_normal_form(a)
    m = len(a)
    n = len(a[0]) if m else 0
    ub = [sum(u[i][j] * b[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if ub[i] != 0:
                return None
        elif ub[i] % d:
            return None
        else:
            y[i] = ub[i] // d
    return [sum(v[i][j] * y[j] for j in range(n)) for i in range(n)]


@dataclass(frozen=True)
class IsogenyLattice:
    diagram: DynkinDiagram
    basis: Matrix
    name: str = "custom"

    def __post_init__(self) -> None:
        k = self.diagram.rank
        try:
            basis = tuple(tuple(int(x) for x in row) for row in self.basis)
        except (TypeError, ValueError):
            raise LatticeError("lattice basis must be an integer matrix") from None
        if len(basis) != k or any(len(row) != k for row in basis):
            raise RankMismatchError(f"lattice basis must be {k}x{k}")
        if determinant(basis) == 0:
            raise LatticeError("lattice basis is singular")
        c = cartan_matrix(self.diagram)
        for j in range(k):
            col = [c[i][j] for i in range(k)]
            if solve_integer(basis, col) is None:
                raise LatticeError(f"simple coroot {j + 1} is not in the lattice (Q^vee must lie in L)")
        object.__setattr__(self, "basis", basis)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @cached_property
    def index(self) -> int:
        return admissible_index(self)


def adjoint(d: DynkinDiagram) -> IsogenyLattice:
    k = d.rank
    return IsogenyLattice(d, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)), ADJOINT)


def simply_connected(d: DynkinDiagram) -> IsogenyLattice:
    return IsogenyLattice(d, cartan_matrix(d), SIMPLY_CONNECTED)


def lattice(d: DynkinDiagram, spec: str | Sequence[Sequence[int]]) -> IsogenyLattice:
    """Preset by name (``"adjoint"``, ``"sc"``) or custom basis matrix (columns = generators)."""
    if isinstance(spec, str):
        key = spec.lower()
        if key == ADJOINT:
            return adjoint(d)
        if key in (SIMPLY_CONNECTED, "simply_connected", "simply-connected"):
            return simply_connected(d)
        raise LatticeError(f"unknown lattice preset {spec!r}")
    return IsogenyLattice(d, tuple(tuple(row) for row in spec))


@dataclass(frozen=True)
class Cocycle:
    """Element of ``L`` in fundamental-coweight coordinates."""

    coords: tuple[int, ...]
    lattice: IsogenyLattice

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.lattice.rank:
            raise RankMismatchError("cocycle rank does not match lattice")
        if not membership(self.coords, self.lattice):
            raise LatticeError(f"{self.coords} does not lie in the {self.lattice.name} lattice")

    @property
    def basis_coords(self) -> tuple[int, ...]:
        x = solve_integer(self.lattice.basis, self.coords)
        assert x is not None
        return tuple(x)


def tag_of(theta: Cocycle) -> tuple[int, ...]:
    """The t-th entry is ``alpha_t(theta)``, i.e. the t-th coweight coordinate."""
    return theta.coords


def membership(v: Sequence[int], lat: IsogenyLattice) -> bool:
    if len(v) != lat.rank:
        raise RankMismatchError(f"vector of length {len(v)} against rank {lat.rank}")
    return solve_integer(lat.basis, list(v)) is not None


def is_admissible(t: Sequence[int], lat: IsogenyLattice) -> Cocycle | None:
    if len(t) != lat.rank:
        raise RankMismatchError(f"tag of length {len(t)} against rank {lat.rank}")
    if solve_integer(lat.basis, list(t)) is None:
        return None
    return Cocycle(tuple(t), lat)


def admissible_index(lat: IsogenyLattice) -> int:
    """Index of the admissible-tag lattice in Z^k: product of the Smith invariant factors."""
    diag, _, _ = smith_normal_form(lat.basis)
    out = 1
    for d in diag:
        out *= d
    return abs(out)


def sl_index_note(d: DynkinDiagram, lat: IsogenyLattice) -> dict | None:
    """For simply-connected ``A_n``, compare the computed index with the quoted ``n``."""
    if lat.name != SIMPLY_CONNECTED or not d.is_connected or d.components[0][0] != "A":
        return None
    n = d.rank
    computed = admissible_index(lat)
    return {
        "group": f"SL({n + 1})",
        "computed_index": computed,
        "quoted_index": n,
        "agrees": computed == n,
        "note": f"Smith normal form of the A{n} Cartan matrix gives index {computed} = n+1; the quoted value is n",
    }
