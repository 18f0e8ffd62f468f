"""The Weyl group as an exact integer matrix group.

Composition convention: the element of the word ``(a, b)`` is ``s_a s_b``,
i.e. the matrix product ``M[s_a] @ M[s_b]`` acting on column vectors, so the
rightmost letter acts first.

Each element carries two matrices:

* ``matrix`` acts on simple-root coordinates;
* ``weight_matrix`` acts on fundamental-weight coordinates.

Coroot and coweight actions are their contragredients.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .diagrams import Matrix
from .errors import GroupTooLargeError, IndexOutOfRangeError, RankMismatchError
from .rootsys import RootSystem, Vector

DEFAULT_LIMIT = 10**6
LIMIT_ENV = "FLAGBUNDLE_ENUM_LIMIT"


def default_limit() -> int:
    """Enumeration guard; overridable through the environment."""
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    weight_matrix: Matrix
    length: int
    word: tuple[int, ...] = field(compare=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __repr__(self) -> str:
        return f"WeylElement(word={self.word}, length={self.length})"


def _tuple(a: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in a.tolist())


def _arr(m: Matrix) -> np.ndarray:
    return np.array(m, dtype=np.int64).reshape(len(m), len(m))


def _simple_mats(rs: RootSystem) -> tuple[list[np.ndarray], list[np.ndarray]]:
    k = rs.rank
    c = rs.cartan_array
    root_mats, weight_mats = [], []
    for i in range(k):
        m = np.eye(k, dtype=np.int64)
        # s_i(alpha_j) = alpha_j - C[j][i] alpha_i : row i of M gets -C[:, i]
        m[i, :] -= c[:, i]
        n = np.eye(k, dtype=np.int64)
        # s_i(lam) = lam - lam_i alpha_i, alpha_i = sum_j C[i][j] omega_j
        n[:, i] -= c[i, :]
        root_mats.append(m)
        weight_mats.append(n)
    return root_mats, weight_mats


_SIMPLE_CACHE: dict[Matrix, tuple[list[np.ndarray], list[np.ndarray]]] = {}


def _simples(rs: RootSystem):
    got = _SIMPLE_CACHE.get(rs.cartan)
    if got is None:
        got = _SIMPLE_CACHE[rs.cartan] = _simple_mats(rs)
    return got


def inversion_count(rs: RootSystem, m: np.ndarray | Matrix) -> int:
    """Number of positive roots sent to negative roots."""
    if rs.n_positive == 0:
        return 0
    images = rs.roots_array @ np.asarray(m, dtype=np.int64).T
    return int(np.count_nonzero((images < 0).any(axis=1)))


def _element(rs: RootSystem, m: np.ndarray, n: np.ndarray, word: Sequence[int]) -> WeylElement:
    return WeylElement(_tuple(m), _tuple(n), inversion_count(rs, m), tuple(word))


def identity(rs: RootSystem) -> WeylElement:
    e = np.eye(rs.rank, dtype=np.int64)
    return _element(rs, e, e, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rs.check_index(i)
    m, n = _simples(rs)
    return _element(rs, m[i - 1], n[i - 1], (i,))


def check_word(rs: RootSystem, word: Iterable[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in word)
    for x in w:
        if not 1 <= x <= rs.rank:
            raise IndexOutOfRangeError(f"letter {x} outside 1..{rs.rank}")
    return w


def word_to_element(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    w = check_word(rs, word)
    ms, ns = _simples(rs)
    m = np.eye(rs.rank, dtype=np.int64)
    n = np.eye(rs.rank, dtype=np.int64)
    for x in w:
        m = m @ ms[x - 1]
        n = n @ ns[x - 1]
    return _element(rs, m, n, w)


def multiply(rs: RootSystem, x: WeylElement, y: WeylElement) -> WeylElement:
    return _element(rs, _arr(x.matrix) @ _arr(y.matrix), _arr(x.weight_matrix) @ _arr(y.weight_matrix),
                    x.word + y.word)


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return word_to_element(rs, reversed(w.word))


def is_reduced(rs: RootSystem, word: Iterable[int]) -> bool:
    w = check_word(rs, word)
    return word_to_element(rs, w).length == len(w)


def longest_element(rs: RootSystem, s: Iterable[int]) -> tuple[WeylElement, tuple[int, ...]]:
    """Longest element of the parabolic subgroup generated by ``{s_i : i in s}``.

    Greedy ascent: extend on the right while some generator raises the length.
    """
    gens = sorted(rs.check_subset(s))
    ms, ns = _simples(rs)
    m = np.eye(rs.rank, dtype=np.int64)
    n = np.eye(rs.rank, dtype=np.int64)
    word: list[int] = []
    while True:
        for i in gens:
            if (m[:, i - 1] >= 0).all():
                m = m @ ms[i - 1]
                n = n @ ns[i - 1]
                word.append(i)
                break
        else:
            break
    w = _element(rs, m, n, word)
    assert w.length == len(word)
    return w, tuple(word)


def demazure_product(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Left fold ``x * s_i = x s_i`` if that raises the length, else ``x``."""
    w = check_word(rs, word)
    ms, ns = _simples(rs)
    m = np.eye(rs.rank, dtype=np.int64)
    n = np.eye(rs.rank, dtype=np.int64)
    kept: list[int] = []
    for x in w:
        if (m[:, x - 1] >= 0).all():
            m = m @ ms[x - 1]
            n = n @ ns[x - 1]
            kept.append(x)
    return _element(rs, m, n, kept)


# --- enumeration -----------------------------------------------------------

@dataclass
class _Level:
    keys: np.ndarray  # w^{-1}(rho) in weight coordinates, one row per element
    parent: np.ndarray
    letter: np.ndarray  # 0-based generator appended on the right


def _bfs(rs: RootSystem, limit: int) -> list[_Level]:
    """Breadth-first closure over lengths, elements keyed by ``w^{-1}(rho)``.

    Right multiplication by ``s_i`` acts on the key as ``u -> u - u_i * alpha_i``
    and raises the length iff ``u_i > 0``. Processing each level in
    lexicographic order of minimal reduced words and trying letters in
    ascending order discovers every element first through its lex-minimal
    reduced word.
    """
    k = rs.rank
    c = rs.cartan_array
    # |u_i| = height of the coroot w(alpha_i^vee), so rows pack into one int64
    bound = int(rs.coroots_array.sum(axis=1).max()) + 1 if rs.n_positive else 1
    base = 2 * bound + 1
    packer = base ** np.arange(k, dtype=np.int64) if base ** k < 2**62 else None
    levels = [_Level(np.ones((1, k), dtype=np.int64), np.array([-1]), np.array([-1]))]
    total = 1
    if total > limit:
        raise GroupTooLargeError(total, limit)
    while True:
        u = levels[-1].keys
        chunks, parents, letters = [], [], []
        for i in range(k):
            idx = np.nonzero(u[:, i] > 0)[0]
            if idx.size:
                chunks.append(u[idx] - u[idx, i:i + 1] * c[i])
                parents.append(idx)
                letters.append(np.full(idx.size, i, dtype=np.int64))
        if not chunks:
            return levels
        cand = np.concatenate(chunks)
        par = np.concatenate(parents)
        let = np.concatenate(letters)
        order = np.lexsort((let, par))
        cand, par, let = cand[order], par[order], let[order]
        if packer is not None:
            _, first = np.unique((cand + bound) @ packer, return_index=True)
        else:
            _, first = np.unique(cand, axis=0, return_index=True)
        first.sort()
        total += first.size
        if total > limit:
            raise GroupTooLargeError(total, limit)
        levels.append(_Level(cand[first], par[first], let[first]))


def length_distribution(rs: RootSystem, limit: int | None = None) -> list[int]:
    """Number of elements of each length (coefficients of the Poincare polynomial)."""
    return [lv.keys.shape[0] for lv in _bfs(rs, default_limit() if limit is None else limit)]


def group_order(rs: RootSystem, limit: int | None = None) -> int:
    return sum(length_distribution(rs, limit))


def enumerate_elements(rs: RootSystem, limit: int | None = None) -> list[WeylElement]:
    """All elements ordered by length, then by lexicographically minimal reduced word."""
    levels = _bfs(rs, default_limit() if limit is None else limit)
    k = rs.rank
    ms, ns = _simples(rs)
    m_stack = np.stack(ms)
    n_stack = np.stack(ns)
    mats = [np.eye(k, dtype=np.int64)[None]]
    wmats = [np.eye(k, dtype=np.int64)[None]]
    words: list[list[tuple[int, ...]]] = [[()]]
    for lv in levels[1:]:
        mats.append(np.matmul(mats[-1][lv.parent], m_stack[lv.letter]))
        wmats.append(np.matmul(wmats[-1][lv.parent], n_stack[lv.letter]))
        prev = words[-1]
        words.append([prev[p] + (int(x) + 1,) for p, x in zip(lv.parent.tolist(), lv.letter.tolist())])
    out = []
    for length, (m_l, n_l, w_l) in enumerate(zip(mats, wmats, words)):
        for m, n, w in zip(m_l, n_l, w_l):
            out.append(WeylElement(_tuple(m), _tuple(n), length, w))
    return out


# --- actions ---------------------------------------------------------------

def _check(w: WeylElement, v: Sequence[int]) -> np.ndarray:
    if len(v) != w.rank:
        raise RankMismatchError(f"rank mismatch: element of rank {w.rank}, vector of length {len(v)}")
    return np.array(v, dtype=np.int64)


def _inverse_int(m: Matrix) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix (Gauss-Jordan over Q)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [[x for x in row[n:]] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ArithmeticError("matrix is not unimodular")
    return np.array([[int(x) for x in row] for row in inv], dtype=np.int64).reshape(n, n)


def act_on_root(w: WeylElement, beta: Sequence[int]) -> Vector:
    return tuple(int(x) for x in _arr(w.matrix) @ _check(w, beta))


def act_on_weight(w: WeylElement, lam: Sequence[int]) -> Vector:
    return tuple(int(x) for x in _arr(w.weight_matrix) @ _check(w, lam))


def act_on_coroot(w: WeylElement, gamma: Sequence[int]) -> Vector:
    """Contragredient of the weight action: pairing(w.lam, w.gamma) = pairing(lam, gamma)."""
    return tuple(int(x) for x in _inverse_int(w.weight_matrix).T @ _check(w, gamma))


def act_on_coweight(w: WeylElement, theta: Sequence[int]) -> Vector:
    """Contragredient of the root action: <w.beta, w.theta> = <beta, theta>."""
    return tuple(int(x) for x in _inverse_int(w.matrix).T @ _check(w, theta))


def permutes_roots(rs: RootSystem, w: WeylElement) -> bool:
    images = rs.roots_array @ _arr(w.matrix).T
    return all(rs.is_root(row) for row in images.tolist())
