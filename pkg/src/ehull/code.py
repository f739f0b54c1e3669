"""Left E-submodules of E^n in doubled GF(2) coordinates.

A code of length n is stored as an RREF basis over 2n columns: columns
0..n-1 hold the u-bits and n..2n-1 the v-bits of x = u*kappa + v*zeta.
Because left multiplication only ever reads the u-bits, every code
splits as kappa*C_Res + zeta*C_Tor, and the closed forms below follow
from <w, z> = (sum u_w u_z, sum v_w u_z).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Optional

from . import gf2
from .gf2 import BitMatrix, ZeroCodeError
from .ring import EMatrix, EVector


class NotFreeError(ValueError):
    """Raised by operations defined only for free codes."""


@dataclass(frozen=True, eq=False)
class ECode:
    n: int
    basis: BitMatrix
    source_generators: Optional[EMatrix] = field(default=None, compare=False)

    def __post_init__(self):
        if self.basis.ncols != 2 * self.n:
            raise gf2.DimensionError("basis must have 2n columns")

    def __eq__(self, other):
        if not isinstance(other, ECode):
            return NotImplemented
        return self.n == other.n and self.basis.rows == other.basis.rows

    def __hash__(self):
        return hash((self.n, self.basis.rows))

    @property
    def dim(self) -> int:
        """GF(2)-dimension; |C| = 2**dim."""
        return self.basis.nrows

    @property
    def size(self) -> int:
        return 1 << self.dim

    @cached_property
    def _split(self) -> tuple[BitMatrix, BitMatrix]:
        n = self.n
        mask = (1 << n) - 1
        res = [r & mask for r in self.basis.rows if r & mask]
        tor = [r >> n for r in self.basis.rows if not r & mask]
        return BitMatrix.from_rows(res, n), BitMatrix.from_rows(tor, n)

    def codewords(self):
        """All codewords as doubled-coordinate ints."""
        return gf2.iter_codewords(self.basis.rows)

    def vectors(self):
        for c in self.codewords():
            yield EVector.from_doubled(c, self.n)

    def contains(self, x: EVector) -> bool:
        return gf2.span_contains(self.basis, x.doubled())

    def generator_matrix(self) -> EMatrix:
        """A generating set: the stored generators, else kappa*Res plus zeta*(extra torsion)."""
        if self.source_generators is not None:
            return self.source_generators
        res, tor = self._split
        rows = [EVector(self.n, r, 0) for r in res.rows]
        extra = gf2.rref(tor)[0]
        have = res
        for t in extra.rows:
            if not gf2.span_contains(have, t):
                rows.append(EVector(self.n, 0, t))
                have = BitMatrix.from_rows(have.rows + (t,), self.n)
        return EMatrix.from_vectors(rows, self.n)

    def __repr__(self) -> str:
        return f"ECode(n={self.n}, dim={self.dim})"


def from_doubled(n: int, rows) -> ECode:
    return ECode(n, gf2.rref(BitMatrix.from_rows(rows, 2 * n))[0])


def from_planes(res: BitMatrix, tor: BitMatrix) -> ECode:
    """The code kappa*res + zeta*tor (tor must contain res for a submodule)."""
    n = res.ncols
    return from_doubled(n, list(res.rows) + [t << n for t in tor.rows])


def from_generators(g: EMatrix) -> ECode:
    """Smallest left E-submodule containing the rows of ``g``.

    Spans x, kappa*x and zeta*x for each row x (tau*x = kappa*x + zeta*x).
    """
    n = g.ncols
    rows = []
    for x in g.vectors():
        rows.append(x.doubled())
        rows.append(x.u)
        rows.append(x.u << n)
    c = from_doubled(n, rows)
    return ECode(n, c.basis, g)


def zero_code(n: int) -> ECode:
    return ECode(n, BitMatrix.empty(2 * n))


def full_code(n: int) -> ECode:
    return ECode(n, BitMatrix.identity(2 * n))


def free_code(g: BitMatrix) -> ECode:
    """The free code generated by kappa*G."""
    return from_generators(EMatrix.kappa_times(g))


def residue(c: ECode) -> BitMatrix:
    return gf2.rref(c._split[0])[0]


def torsion(c: ECode) -> BitMatrix:
    return c._split[1]


def is_free(c: ECode) -> bool:
    return gf2.row_space_equal(residue(c), torsion(c))


def _full(n: int) -> BitMatrix:
    return BitMatrix.identity(n)


def left_dual(c: ECode) -> ECode:
    """{z : <z, w> = 0 for all w in C} = kappa*Res^perp + zeta*Res^perp."""
    h = gf2.nullspace(residue(c))
    return from_planes(h, h)


def right_dual(c: ECode) -> ECode:
    """{z : <w, z> = 0 for all w in C} = kappa*Tor^perp + zeta*F2^n."""
    res, tor = c._split
    h = gf2.nullspace(res.stack(tor))
    return from_planes(h, _full(c.n))


def dual(c: ECode) -> ECode:
    return ECode(c.n, gf2.intersect_row_spaces(left_dual(c).basis, right_dual(c).basis))


def _meet(a: ECode, b: ECode) -> ECode:
    return ECode(a.n, gf2.intersect_row_spaces(a.basis, b.basis))


def lhull(c: ECode) -> ECode:
    return _meet(c, left_dual(c))


def rhull(c: ECode) -> ECode:
    return _meet(c, right_dual(c))


def hull(c: ECode) -> ECode:
    return _meet(c, dual(c))


def _require_free(c: ECode, what: str) -> BitMatrix:
    res = residue(c)
    if not gf2.row_space_equal(res, torsion(c)):
        raise NotFreeError(f"{what} needs a free code (C_Res = C_Tor)")
    return res


def hull_generator_free(c: ECode) -> EMatrix:
    """kappa*G with G a basis of Hull(C_Res); generates Hull(C) for free C."""
    res = _require_free(c, "hull generator")
    h = gf2.intersect_row_spaces(res, gf2.nullspace(res))
    return EMatrix.kappa_times(h)


def binary_hull_dim(g: BitMatrix) -> int:
    """k - rank(G Gᵀ) for a full-rank binary generator matrix G."""
    return g.nrows - gf2.rank(gf2.mul_transpose(g, g))


def gram_hull_dim(rows) -> int:
    """Same as ``binary_hull_dim`` on raw independent int rows."""
    gram = []
    for a in rows:
        v = 0
        for j, b in enumerate(rows):
            if (a & b).bit_count() & 1:
                v |= 1 << j
        gram.append(v)
    return len(rows) - gf2.rank_rows(gram)


def hull_rank(c: ECode) -> int:
    res = _require_free(c, "hull-rank")
    return binary_hull_dim(res)


def min_distance(c: ECode, *, fast: bool = True) -> int:
    """Minimum number of nonzero coordinates over nonzero codewords.

    For free codes the residue minimum weight is used; ``fast=False`` forces
    the full doubled-coordinate scan.
    """
    if c.dim == 0:
        raise ZeroCodeError("zero code has no minimum distance")
    if fast and is_free(c):
        return gf2.min_weight_rows(residue(c).rows)
    n = c.n
    mask = (1 << n) - 1
    best = n
    for w in gf2.iter_codewords(c.basis.rows):
        if w:
            wt = ((w & mask) | (w >> n)).bit_count()
            if wt < best:
                best = wt
    return best


@dataclass(frozen=True)
class CodeSummary:
    n: int
    k: int
    d: Optional[int]
    hull_rank: Optional[int]
    free: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def label(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


def summarize(c: ECode) -> CodeSummary:
    """n, rank (free) or GF(2)-dimension, distance, hull-rank (free only), freeness."""
    free = is_free(c)
    k = residue(c).nrows if free else c.dim
    d = min_distance(c) if c.dim else None
    return CodeSummary(c.n, k, d, hull_rank(c) if free else None, free)

