"""Line-bundle cohomology on G/B via the dot action (Borel-Weil-Bott).

Classes are written in fundamental-weight coordinates ``lam_i = L . Gamma_i``;
``rho = (1, ..., 1)`` and the canonical class is ``-2 rho``.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotDominantError, RankMismatchError
from .rootsys import RootSystem

Vector = tuple[int, ...]


@dataclass(frozen=True)
class CohomologyResult:
    """``degree is None`` means every cohomology group vanishes."""

    degree: int | None = None
    dimension: int = 0

    @property
    def all_zero(self) -> bool:
        return self.degree is None

    def h(self, i: int) -> int:
        return self.dimension if i == self.degree else 0

    def to_dict(self) -> dict:
        if self.all_zero:
            return {"result": "ALL_ZERO"}
        return {"result": "NONZERO", "degree": self.degree, "dimension": self.dimension}


ALL_ZERO = CohomologyResult()


def _vec(rs: RootSystem, lam: Sequence[int]) -> Vector:
    if len(lam) != rs.rank:
        raise RankMismatchError(f"class of length {len(lam)} for rank {rs.rank}")
    return tuple(int(x) for x in lam)


def rho(rs: RootSystem) -> Vector:
    return (1,) * rs.rank


def canonical_class(rs: RootSystem) -> Vector:
    return (-2,) * rs.rank


def dot_reflect(rs: RootSystem, lam: Sequence[int], i: int) -> Vector:
    """``L + (L . Gamma_i + 1) K_i`` with ``K_i = -alpha_i``."""
    rs.check_index(i)
    v = _vec(rs, lam)
    a = v[i - 1] + 1
    row = rs.cartan[i - 1]
    return tuple(v[j] - a * row[j] for j in range(rs.rank))


def shifted_pairings(rs: RootSystem, lam: Sequence[int]) -> list[int]:
    """``<lam + rho, beta^vee>`` for every positive coroot."""
    v = _vec(rs, lam)
    return [sum((v[j] + 1) * g[j] for j in range(rs.rank)) for g in rs.positive_coroots]


def euler_characteristic(rs: RootSystem, lam: Sequence[int]) -> int:
    """``prod <lam + rho, beta^vee> / <rho, beta^vee>`` over positive coroots."""
    num = shifted_pairings(rs, lam)
    out = Fraction(1)
    for n, g in zip(num, rs.positive_coroots):
        out *= Fraction(n, sum(g))
    if out.denominator != 1:
        raise ArithmeticError(f"non-integral Euler characteristic {out}")
    return int(out)


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    v = _vec(rs, lam)
    if any(x < 0 for x in v):
        raise NotDominantError(f"{v} is not dominant")
    return euler_characteristic(rs, v)


def serre_partner(lam: Sequence[int]) -> Vector:
    return tuple(-int(x) - 2 for x in lam)


def first_negative(v: Vector) -> int | None:
    return next((i + 1 for i, x in enumerate(v) if x < 0), None)


def last_negative(v: Vector) -> int | None:
    return next((i + 1 for i in reversed(range(len(v))) if v[i] < 0), None)


def most_negative(v: Vector) -> int | None:
    if min(v, default=0) >= 0:
        return None
    return min(range(len(v)), key=lambda i: (v[i], i)) + 1


Strategy = Callable[[Vector], "int | None"]


def dominant_partner(rs: RootSystem, lam: Sequence[int], strategy: Strategy = first_negative) -> tuple[Vector, int]:
    """Dot-reflect at negative coordinates until dominant; returns ``(class, steps)``.

    The input must be regular (``lam + rho`` off every wall), otherwise the walk
    can stall at a coordinate equal to -1.
    """
    v = _vec(rs, lam)
    steps = 0
    while (i := strategy(v)) is not None:
        if v[i - 1] == -1:
            raise ValueError(f"{lam} is singular for the dot action")
        v = dot_reflect(rs, v, i)
        steps += 1
    return v, steps


def cohomology(rs: RootSystem, lam: Sequence[int], strategy: Strategy = first_negative) -> CohomologyResult:
    if any(p == 0 for p in shifted_pairings(rs, lam)):
        return ALL_ZERO
    dom, steps = dominant_partner(rs, lam, strategy)
    return CohomologyResult(steps, weyl_dimension(rs, dom))
