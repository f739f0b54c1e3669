"""Permutation equivalence of binary codes and of free E-codes."""

from __future__ import annotations

from typing import Optional, Sequence

from . import gf2
from .code import ECode, NotFreeError, binary_hull_dim, from_doubled, is_free, residue
from .gf2 import BitMatrix, DimensionError


class Permutation(tuple):
    """Coordinate map j -> self[j] on {0, ..., n-1}."""

    def __new__(cls, mapping: Sequence[int]):
        mapping = tuple(int(x) for x in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a permutation: {mapping}")
        return super().__new__(cls, mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for j, pj in enumerate(self):
            inv[pj] = j
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply ``other`` first, then ``self``."""
        return Permutation(self[other[j]] for j in range(len(self)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Cycle notation with 1-based points, fixed points omitted."""
        parts = ["(" + " ".join(str(x + 1) for x in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def apply_permutation(c: ECode, perm: Sequence[int]) -> ECode:
    """Move coordinate j to position perm[j], identically in both planes."""
    perm = Permutation(perm)
    if perm.n != c.n:
        raise DimensionError(f"permutation of size {perm.n} does not act on length {c.n}")
    n = c.n
    mask = (1 << n) - 1
    rows = [
        gf2.permute_bits(r & mask, perm) | (gf2.permute_bits(r >> n, perm) << n)
        for r in c.basis.rows
    ]
    return from_doubled(n, rows)


def weight_enumerator(g: BitMatrix) -> list[int]:
    """Number of codewords of each Hamming weight 0..n."""
    return gf2.weight_distribution(g.rows, g.ncols)


def _codewords(rows: Sequence[int]) -> list[int]:
    return list(gf2.iter_codewords(rows))


def column_signatures(words: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """For each column, the multiset of weights of the codewords covering it."""
    sigs = [[0] * (n + 1) for _ in range(n)]
    for c in words:
        w = c.bit_count()
        x = c
        while x:
            low = x & -x
            sigs[low.bit_length() - 1][w] += 1
            x ^= low
    return [tuple(s) for s in sigs]


def invariant_key(g: BitMatrix) -> tuple:
    """Permutation-invariant fingerprint: dim, weight enumerator, hull dim, column signatures."""
    red = gf2.rref(g)[0]
    words = _codewords(red.rows)
    n = g.ncols
    enum = [0] * (n + 1)
    for c in words:
        enum[c.bit_count()] += 1
    sigs = sorted(column_signatures(words, n))
    return (red.nrows, tuple(enum), binary_hull_dim(red), tuple(sigs))


def _search(a_rows: Sequence[int], b_words: set[int], sig_a, sig_b, n: int) -> Optional[list[int]]:
    # Backtracking over column images; columns of a are assigned in order of
    # fewest candidates. After each assignment every basis row of a, restricted
    # to the assigned columns, must match some codeword of b on their images.
    cand = [[t for t in range(n) if sig_b[t] == sig_a[s]] for s in range(n)]
    if any(not c for c in cand):
        return None
    order = sorted(range(n), key=lambda s: (len(cand[s]), s))
    perm = [-1] * n
    used = [False] * n
    b_list = list(b_words)

    def consistent(depth: int) -> bool:
        tmask = 0
        for s in order[: depth + 1]:
            tmask |= 1 << perm[s]
        projected = {c & tmask for c in b_list}
        for r in a_rows:
            img = 0
            for s in order[: depth + 1]:
                if (r >> s) & 1:
                    img |= 1 << perm[s]
            if img not in projected:
                return False
        return True

    def rec(depth: int) -> bool:
        if depth == n:
            return True
        s = order[depth]
        for t in cand[s]:
            if used[t]:
                continue
            perm[s] = t
            used[t] = True
            if consistent(depth) and rec(depth + 1):
                return True
            used[t] = False
        perm[s] = -1
        return False

    return perm if rec(0) else None


def binary_equivalent(a: BitMatrix, b: BitMatrix) -> Optional[Permutation]:
    """A column permutation taking rowspace(a) onto rowspace(b), or None."""
    if a.ncols != b.ncols:
        raise DimensionError("codes of different lengths")
    n = a.ncols
    ra = gf2.rref(a)[0]
    rb = gf2.rref(b)[0]
    if ra.nrows != rb.nrows:
        return None
    if ra.rows == rb.rows:
        return Permutation.identity(n)
    wa = _codewords(ra.rows)
    wb = _codewords(rb.rows)
    sig_a = column_signatures(wa, n)
    sig_b = column_signatures(wb, n)
    if sorted(sig_a) != sorted(sig_b):
        return None
    if binary_hull_dim(ra) != binary_hull_dim(rb):
        return None
    perm = _search(ra.rows, set(wb), sig_a, sig_b, n)
    if perm is None:
        return None
    perm = Permutation(perm)
    if not gf2.row_space_equal(ra.permute_columns(perm), rb):
        raise AssertionError("equivalence witness failed verification")
    return perm


def e_equivalent(c: ECode, d: ECode) -> Optional[Permutation]:
    """Equivalence of free codes, decided on their residue codes."""
    if not (is_free(c) and is_free(d)):
        raise NotFreeError("e_equivalent needs free codes")
    if c.n != d.n:
        return None
    perm = binary_equivalent(residue(c), residue(d))
    if perm is None:
        return None
    if apply_permutation(c, perm) != d:
        raise AssertionError("residue witness does not carry the E-codes onto each other")
    return perm
