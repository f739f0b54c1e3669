"""Definition-level ground truth by exhaustive scans of E^n.

Nothing here uses the bit-plane closed forms: elements are symbol indices
0, kappa, tau, zeta -> 0, 1, 2, 3 and all arithmetic goes through the
addition and multiplication tables entered by hand below.
"""

from __future__ import annotations

import random
from functools import reduce
from itertools import product
from typing import Literal

import numpy as np

from .code import ECode, dual, from_doubled, from_generators, hull, left_dual, lhull, min_distance, rhull, right_dual
from .gf2 import BitMatrix
from .ring import EElem, EMatrix, EVector

MAX_N = 8

# index order: 0, kappa, tau, zeta
SYMBOLS = ("0", "k", "t", "z")
ADD_TABLE = np.array(
    [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ],
    dtype=np.int8,
)
# row = left factor, column = right factor
MUL_TABLE = np.array(
    [
        [0, 0, 0, 0],
        [0, 1, 1, 0],
        [0, 2, 2, 0],
        [0, 3, 3, 0],
    ],
    dtype=np.int8,
)

_IDX_OF_ELEM = {EElem.ZERO: 0, EElem.KAPPA: 1, EElem.TAU: 2, EElem.ZETA: 3}
_ELEM_OF_IDX = {i: e for e, i in _IDX_OF_ELEM.items()}

Side = Literal["left", "right", "two_sided"]


class OracleRangeError(ValueError):
    pass


def _check_n(n: int) -> None:
    if n > MAX_N:
        raise OracleRangeError(f"brute-force oracle limited to n <= {MAX_N}, got {n}")


def all_vectors(n: int) -> np.ndarray:
    """Every vector of E^n, lexicographic in 0 < kappa < tau < zeta."""
    _check_n(n)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(product(range(4), repeat=n)), dtype=np.int8)


def to_indices(row: int, n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int8)
    for j in range(n):
        e = EElem.from_uv((row >> j) & 1, (row >> (n + j)) & 1)
        out[j] = _IDX_OF_ELEM[e]
    return out


def to_doubled(vec) -> int:
    n = len(vec)
    row = 0
    for j, s in enumerate(vec):
        e = _ELEM_OF_IDX[int(s)]
        row |= e.u << j
        row |= e.v << (n + j)
    return row


def _unique_rows(a: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return a[:1]
    return np.unique(a, axis=0)


def generating_set(c: ECode) -> np.ndarray:
    """Basis rows together with their left multiples by every ring element.

    E has no unit, so the rows themselves must be listed separately.
    """
    n = c.n
    gens = [to_indices(r, n) for r in c.basis.rows]
    out = []
    for g in gens:
        out.append(g)
        for a in range(4):
            out.append(MUL_TABLE[a, g])
    if not out:
        return np.zeros((0, n), dtype=np.int8)
    return _unique_rows(np.array(out, dtype=np.int8))


def codewords(c: ECode) -> np.ndarray:
    """All codewords as the additive closure of ``generating_set``."""
    _check_n(c.n)
    words = np.zeros((1, c.n), dtype=np.int8)
    for g in generating_set(c):
        shifted = ADD_TABLE[words, g]
        words = _unique_rows(np.concatenate([words, shifted]))
    return words


def inner_all(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """<left_i, right_i> row by row, broadcast over leading axes."""
    prods = MUL_TABLE[left, right]
    if prods.shape[-1] == 0:
        return np.zeros(prods.shape[:-1], dtype=np.int8)
    return reduce(lambda acc, col: ADD_TABLE[acc, col], np.moveaxis(prods, -1, 0))


def _as_code(n: int, vectors: np.ndarray) -> ECode:
    rows = [to_doubled(v) for v in vectors]
    code = from_doubled(n, rows)
    if code.size != len(vectors):
        raise AssertionError("oracle set is not additively closed")
    return code


def is_submodule(vectors: np.ndarray) -> bool:
    s = {tuple(v) for v in vectors.tolist()}
    for x in vectors:
        for a in range(4):
            if tuple(MUL_TABLE[a, x].tolist()) not in s:
                return False
        for y in vectors:
            if tuple(ADD_TABLE[x, y].tolist()) not in s:
                return False
    return True


def dual_vectors(c: ECode, side: Side) -> np.ndarray:
    _check_n(c.n)
    z = all_vectors(c.n)
    gens = generating_set(c)
    keep = np.ones(len(z), dtype=bool)
    for g in gens:
        gb = np.broadcast_to(g, z.shape)
        if side in ("left", "two_sided"):
            keep &= inner_all(z, gb) == 0
        if side in ("right", "two_sided"):
            keep &= inner_all(gb, z) == 0
    return z[keep]


def dual_by_definition(c: ECode, side: Side = "two_sided") -> ECode:
    """Scan E^n for every z orthogonal to C on the requested side(s).

    Testing against the additive generators of C is enough because the
    inner product is additive in each argument.
    """
    return _as_code(c.n, dual_vectors(c, side))


def hull_vectors(c: ECode, side: Side = "two_sided") -> np.ndarray:
    mine = {tuple(v) for v in codewords(c).tolist()}
    dual = dual_vectors(c, side)
    keep = [v for v in dual.tolist() if tuple(v) in mine]
    return np.array(keep, dtype=np.int8).reshape(-1, c.n)


def hull_by_definition(c: ECode, side: Side = "two_sided") -> ECode:
    return _as_code(c.n, hull_vectors(c, side))


def min_distance_by_definition(c: ECode) -> int:
    """Literal pairwise minimum of d(w, z) over distinct codewords."""
    words = codewords(c)
    if len(words) < 2:
        raise ValueError("need at least two codewords")
    best = c.n
    for i in range(len(words) - 1):
        d = (words[i + 1 :] != words[i]).sum(axis=1).min()
        if d < best:
            best = int(d)
    return best


def residue_by_definition(c: ECode) -> set[tuple[int, ...]]:
    """{pi(w) : w in C}, with pi reading kappa and tau as 1."""
    words = codewords(c)
    return {tuple(int(s in (1, 2)) for s in w) for w in words.tolist()}


def torsion_by_definition(c: ECode) -> set[tuple[int, ...]]:
    """{v : v*zeta in C}."""
    words = {tuple(w) for w in codewords(c).tolist()}
    out = set()
    for v in product((0, 1), repeat=c.n):
        if tuple(3 * b for b in v) in words:
            out.add(v)
    return out


# --- randomized agreement sweep -------------------------------------------


def random_code(rng: random.Random, n: int, free: bool | None = None) -> ECode:
    """A random E-code of length n from one to n random generator rows.

    Free codes come from kappa times a random binary matrix; otherwise the
    rows use all four symbols, so torsion strictly larger than the residue
    is common.
    """
    if free is None:
        free = rng.random() < 0.5
    nrows = rng.randint(1, n)
    if free:
        g = BitMatrix.from_rows([rng.getrandbits(n) for _ in range(nrows)], n)
        return from_generators(EMatrix.kappa_times(g))
    vecs = [EVector(n, rng.getrandbits(n), rng.getrandbits(n)) for _ in range(nrows)]
    return from_generators(EMatrix.from_vectors(vecs, n))


def compare_with_closed_forms(c: ECode) -> list[str]:
    """Names of the quantities where the closed forms disagree with the scans."""
    bad = []
    for side, fn in (("left", left_dual), ("right", right_dual), ("two_sided", dual)):
        if fn(c) != dual_by_definition(c, side):
            bad.append(f"{side} dual")
    for side, fn in (("left", lhull), ("right", rhull), ("two_sided", hull)):
        if fn(c) != hull_by_definition(c, side):
            bad.append(f"{side} hull")
    if c.dim and min_distance(c) != min_distance_by_definition(c):
        bad.append("min_distance")
    return bad


def sweep(count: int, max_n: int = 6, seed: int = 0) -> list[tuple[int, ECode, list[str]]]:
    """Check ``count`` random codes of length 1..max_n; returns the disagreements."""
    _check_n(max_n)
    rng = random.Random(seed)
    out = []
    for i in range(count):
        c = random_code(rng, rng.randint(1, max_n))
        bad = compare_with_closed_forms(c)
        if bad:
            out.append((i, c, bad))
    return out
