"""Bott-Samelson words: image dimensions and contraction-class dimensions.

A Bott-Samelson variety is represented only by its word; the Schubert variety
it maps onto is indexed by the Demazure product of the word.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import RankTooLargeError
from .rootsys import RootSystem, positive_subsystem
from .weyl import demazure_product, longest_element

FACE_RANK_LIMIT = 8


def image_dimension(rs: RootSystem, word: Iterable[int]) -> int:
    return demazure_product(rs, word).length


def chI_dimension(rs: RootSystem, I: Iterable[int]) -> int:
    """Dimension of a class of points joined by chains of curves contracted along ``I``.

    Here the subsystem is the one generated by ``I`` itself.
    """
    s = rs.check_subset(I)
    n = len(positive_subsystem(rs, s))
    w, _ = longest_element(rs, s)
    assert w.length == n
    return n


@dataclass(frozen=True)
class FaceRow:
    I: tuple[int, ...]
    dimension: int
    longest_word: tuple[int, ...]


def simplicial_face_report(rs: RootSystem, max_rank: int = FACE_RANK_LIMIT) -> list[FaceRow]:
    """One row per proper subset of the nodes, ordered by size then lexicographically."""
    k = rs.rank
    if k > max_rank:
        raise RankTooLargeError(f"rank {k} exceeds face-report bound {max_rank}")
    rows = []
    for size in range(k):
        for sub in itertools.combinations(range(1, k + 1), size):
            _, word = longest_element(rs, sub)
            rows.append(FaceRow(sub, chI_dimension(rs, sub), word))
    return rows
