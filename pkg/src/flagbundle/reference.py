"""Closed-form reference values, independent of root generation.

Used as oracles by the verification sweeps and the test suite.
"""

from __future__ import annotations

from math import factorial

from .diagrams import DynkinDiagram

EXCEPTIONAL_B = {
    ("E", 6): (16, 22, 30, 42, 30, 16),
    ("E", 7): (34, 49, 66, 96, 75, 52, 27),
    ("E", 8): (92, 136, 182, 270, 220, 168, 114, 58),
    ("F", 4): (16, 30, 42, 22),
    ("G", 2): (10, 6),
}


def b_row(family: str, k: int) -> tuple[int, ...]:
    """Coefficients of the sum of positive roots for a simple type, by row formula."""
    if family == "A":
        return tuple(t * (k + 1 - t) for t in range(1, k + 1))
    if family == "B":
        return tuple(t * (2 * k - t) for t in range(1, k + 1))
    if family == "C":
        return tuple(t * (2 * k + 1 - t) for t in range(1, k)) + (k * (k + 1) // 2,)
    if family == "D":
        half = (k - 1) * k // 2
        return tuple(t * (2 * k - 1 - t) for t in range(1, k - 1)) + (half, half)
    return EXCEPTIONAL_B[(family, k)]


def reference_b(d: DynkinDiagram) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for family, k in d.components:
        out += b_row(family, k)
    return out


def n_positive_roots(d: DynkinDiagram) -> int:
    total = 0
    for family, k in d.components:
        total += {
            "A": k * (k + 1) // 2,
            "B": k * k,
            "C": k * k,
            "D": k * (k - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(k, 0),
            "F": 24,
            "G": 6,
        }[family]
    return total


def weyl_order(d: DynkinDiagram) -> int:
    total = 1
    for family, k in d.components:
        if family == "A":
            total *= factorial(k + 1)
        elif family in "BC":
            total *= 2**k * factorial(k)
        elif family == "D":
            total *= 2 ** (k - 1) * factorial(k)
        else:
            total *= {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[
                (family, k)
            ]
    return total


def cartan_determinant(d: DynkinDiagram) -> int:
    total = 1
    for family, k in d.components:
        total *= {"A": k + 1, "B": 2, "C": 2, "D": 4, "E": 9 - k, "F": 1, "G": 1}[family]
    return total
