"""Numerical model of a flag bundle ``G/B -> P^1`` and the parabolic identities.

A bundle is determined by its diagram, isogeny lattice and a dominant cocycle
``theta`` (coweight coordinates). Fundamental sections are indexed by Weyl
elements ``w``; the t-th degree is ``d_t(w) = <w(alpha_t), theta>``. The two
sections through the t-th pivotal P^1-bundle are ``w`` and ``w s_t`` (right
multiplication), so ``d_t(w s_t) = -d_t(w)``.

For the parabolic part, ``I`` is the set of nodes outside the Levi factor and
``Phi+(I)`` is the set of positive roots generated by the nodes not in ``I``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .diagrams import DynkinDiagram, cartan_matrix
from .errors import ComponentMissesIError, DiagramMismatchError, LatticeError, RankMismatchError
from .lattice import IsogenyLattice, membership
from .rootsys import b_coefficients, c_coefficients, generate, positive_subsystem
from .weyl import WeylElement, enumerate_elements, word_to_element

Vector = tuple[int, ...]


@dataclass(frozen=True)
class FlagBundleModel:
    diagram: DynkinDiagram
    lattice: IsogenyLattice
    theta: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", tuple(int(x) for x in self.theta))
        if self.lattice.diagram != self.diagram:
            raise DiagramMismatchError("lattice belongs to a different diagram")
        if len(self.theta) != self.diagram.rank:
            raise RankMismatchError(f"cocycle of length {len(self.theta)} for rank {self.diagram.rank}")
        if any(x < 0 for x in self.theta):
            raise LatticeError(f"cocycle {self.theta} is not dominant; normalize it first")
        if not membership(self.theta, self.lattice):
            raise LatticeError(f"cocycle {self.theta} is not in the {self.lattice.name} lattice")

    @classmethod
    def from_raw(cls, diagram: DynkinDiagram, lat: IsogenyLattice, raw: Sequence[int]) -> "FlagBundleModel":
        dominant, _ = normalize_to_dominant(diagram, raw)
        return cls(diagram, lat, dominant)


@dataclass(frozen=True)
class SectionDegrees:
    w: WeylElement
    degrees: Vector


def normalize_to_dominant(d: DynkinDiagram, raw: Sequence[int]) -> tuple[Vector, WeylElement]:
    """Move a coweight into the dominant chamber by reflecting at the first negative coordinate.

    Returns ``(dominant, w)`` with ``act_on_coweight(w, raw) == dominant``.
    """
    c = cartan_matrix(d)
    k = d.rank
    if len(raw) != k:
        raise RankMismatchError(f"vector of length {len(raw)} for rank {k}")
    theta = [int(x) for x in raw]
    applied: list[int] = []
    while True:
        neg = next((i for i in range(k) if theta[i] < 0), None)
        if neg is None:
            break
        a = theta[neg]
        # s_i(theta) = theta - <alpha_i, theta> alpha_i^vee, alpha_i^vee = column i of C
        theta = [theta[j] - a * c[j][neg] for j in range(k)]
        applied.append(neg + 1)
    w = word_to_element(generate(d), reversed(applied))
    return tuple(theta), w


def tag(m: FlagBundleModel) -> Vector:
    return m.theta


def fundamental_section_degrees(m: FlagBundleModel, w: WeylElement) -> SectionDegrees:
    if w.rank != m.diagram.rank:
        raise RankMismatchError("Weyl element rank does not match the bundle")
    k = m.diagram.rank
    degrees = tuple(sum(w.matrix[j][t] * m.theta[j] for j in range(k)) for t in range(k))
    return SectionDegrees(w, degrees)


def fundamental_sections(m: FlagBundleModel, limit: int | None = None) -> list[SectionDegrees]:
    """Degrees of all |W| fundamental sections (subject to the enumeration guard)."""
    rs = generate(m.diagram)
    return [fundamental_section_degrees(m, w) for w in enumerate_elements(rs, limit)]


def is_minimal_section(sd: SectionDegrees) -> bool:
    return all(x >= 0 for x in sd.degrees)


def minimal_sections(m: FlagBundleModel, limit: int | None = None) -> list[SectionDegrees]:
    return [sd for sd in fundamental_sections(m, limit) if is_minimal_section(sd)]


def isomorphic(m1: FlagBundleModel, m2: FlagBundleModel) -> bool:
    if m1.diagram != m2.diagram:
        raise DiagramMismatchError(f"{m1.diagram} vs {m2.diagram}")
    if m1.lattice.basis != m2.lattice.basis:
        raise DiagramMismatchError("models live in different isogeny lattices")
    return tag(m1) == tag(m2)


# --- parabolic identities --------------------------------------------------

def _subset(d: DynkinDiagram, I: Iterable[int]) -> frozenset[int]:
    return generate(d).check_subset(I)


def _check_meets_all_components(d: DynkinDiagram, I: frozenset[int]) -> None:
    for block, (family, rank) in zip(d.blocks, d.components):
        if not I.intersection(block):
            raise ComponentMissesIError(f"component {family}{rank} on nodes {list(block)} contains no node of I")


def rel_canonical_decomposition(d: DynkinDiagram, I: Iterable[int]) -> Vector:
    """Coefficients ``b_t - c_t`` of the relative canonical class of ``G/B -> G/P``."""
    b = b_coefficients(d)
    c = c_coefficients(d, I)
    return tuple(x - y for x, y in zip(b, c))


def dim_GP(d: DynkinDiagram, I: Iterable[int]) -> int:
    s = _subset(d, I)
    rs = generate(d)
    levi = [t for t in range(1, d.rank + 1) if t not in s]
    return rs.n_positive - len(positive_subsystem(rs, levi))


def _degree_coefficients(d: DynkinDiagram, I: frozenset[int]) -> Vector:
    b = b_coefficients(d)
    bc = rel_canonical_decomposition(d, I)
    return tuple(b[t] if (t + 1) in I else bc[t] for t in range(d.rank))


def degree_identity_holds(d: DynkinDiagram, I: Iterable[int], t: Sequence[int]) -> bool:
    """``dim G/P == sum_{j not in I} (b_j - c_j) d_j + sum_{i in I} b_i d_i``."""
    s = _subset(d, I)
    if len(t) != d.rank:
        raise RankMismatchError(f"tag of length {len(t)} for rank {d.rank}")
    coeff = _degree_coefficients(d, s)
    return sum(a * x for a, x in zip(coeff, t)) == dim_GP(d, s)


def restricted_trivial(t: Sequence[int], I: Iterable[int]) -> bool:
    s = frozenset(I)
    return all(x == 0 for idx, x in enumerate(t, start=1) if idx not in s)


def restricted_tag(t: Sequence[int], I: Iterable[int]) -> Vector:
    """Tag of the Levi part: the entries on the nodes outside ``I``."""
    s = frozenset(I)
    return tuple(x for idx, x in enumerate(t, start=1) if idx not in s)


def unsplit_tag_solutions(d: DynkinDiagram, I: Iterable[int]) -> list[Vector]:
    """All tags with ``d_i >= 1`` on ``I``, ``d_j >= 0`` elsewhere, satisfying the degree identity.

    Exhaustive search with every entry bounded by ``dim G/P``; branches whose
    partial sum already exceeds the target are cut, which is exact because all
    coefficients are nonnegative.
    """
    s = _subset(d, I)
    _check_meets_all_components(d, s)
    coeff = _degree_coefficients(d, s)
    target = dim_GP(d, s)
    k = d.rank
    order = sorted(range(k), key=lambda t: ((t + 1) not in s, t))
    lower = [1 if (t + 1) in s else 0 for t in range(k)]
    out: list[Vector] = []
    current = [0] * k

    def search(pos: int, total: int) -> None:
        if pos == k:
            if total == target:
                out.append(tuple(current))
            return
        t = order[pos]
        for value in range(lower[t], target + 1):
            step = total + coeff[t] * value
            if step > target:
                break
            current[t] = value
            search(pos + 1, step)
        current[t] = 0

    search(0, 0)
    out.sort()
    for sol in out:
        if not restricted_trivial(sol, s):
            raise AssertionError(f"tag {sol} for {d}, I={sorted(s)} does not vanish off I")
    return out


def homogeneity_inequality_1(d: DynkinDiagram, I: Iterable[int]) -> bool:
    """``b_j - c_j > 0`` for every node ``j`` outside ``I``."""
    s = _subset(d, I)
    _check_meets_all_components(d, s)
    bc = rel_canonical_decomposition(d, s)
    return all(bc[j - 1] > 0 for j in range(1, d.rank + 1) if j not in s)


def homogeneity_inequality_2(d: DynkinDiagram, I: Iterable[int]) -> bool:
    """``sum_{i in I} b_i >= dim G/P``."""
    s = _subset(d, I)
    _check_meets_all_components(d, s)
    b = b_coefficients(d)
    return sum(b[i - 1] for i in s) >= dim_GP(d, s)
