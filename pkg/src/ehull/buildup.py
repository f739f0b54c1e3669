"""Build-up constructions: free [n, k] code with hull-rank l -> free [n+2, k+1].

Every construction works on the residue side.  With r_i the rows of the
residue generator G, s_j the rows of a residue parity-check matrix H and
u a binary vector of length n, let v_i = <u, r_i> and w_j = <u, s_j>.
The new generator G' and parity-check H' are kappa times the binary
matrices assembled below (two new leading coordinates, then the old n).

The hull-rank of the output is always recomputed as (k+1) - rank(G1 G1ᵀ)
and compared with what the method promises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import gf2
from .code import ECode, NotFreeError, dual, from_generators, hull_rank, is_free, residue
from .gf2 import BitMatrix, BitVector
from .ring import EMatrix, e_inner

Method = Literal["I", "II", "III", "IV"]
METHODS = ("I", "II", "III", "IV")


class PreconditionError(ValueError):
    """A construction's condition on the input code or on u is violated."""


class ConstructionMismatch(AssertionError):
    """The recomputed hull-rank contradicts the construction's guarantee."""


@dataclass(frozen=True)
class BuildOutput:
    code: ECode
    generator: EMatrix
    parity_check: EMatrix
    input_hull_rank: int
    hull_rank: int
    predicted_hull_rank: frozenset[int]
    v: tuple[int, ...]
    w: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.generator.nrows


def _extend(head: tuple[int, int], tail: int) -> int:
    # two new coordinates in front, old coordinates shifted by 2
    return head[0] | (head[1] << 1) | (tail << 2)


def _first_rows(method: str, u: int) -> tuple[int, int]:
    g_head = {"I": (1, 0), "II": (1, 1), "III": (1, 1), "IV": (1, 0)}[method]
    h_head = {"I": (1, 0), "II": (1, 1), "III": (1, 1), "IV": (0, 1)}[method]
    return _extend(g_head, u), _extend(h_head, u)


def _g_row_head(method: str, vi: int, v1: int, literal: bool) -> tuple[int, int]:
    if method in ("I", "IV"):
        return (vi, vi)
    if method == "II":
        return (0, 0)
    return (v1 if literal else vi, 0)


def _h_row_head(method: str, wj: int) -> tuple[int, int]:
    if method in ("I", "IV"):
        return (wj, wj)
    return (0, wj)


def _predicted(method: str, l: int) -> frozenset[int]:
    return {
        "I": frozenset({l + 1}),
        "II": frozenset({l + 1}),
        "III": frozenset({l, l + 1, l + 2}),
        "IV": frozenset({l}),
    }[method]


def _check(method: str, u: BitVector, g: BitMatrix, v: list[int]) -> None:
    uu = u.dot(u)
    if method == "I":
        if uu != 1:
            raise PreconditionError("Construction I requires <u,u> = 1")
        return
    if uu != 0:
        raise PreconditionError(f"Construction {method} requires <u,u> = 0")
    if method == "II" and any(v):
        bad = [i + 1 for i, x in enumerate(v) if x]
        raise PreconditionError(f"Construction II requires <u, r_i> = 0 for every residue row (fails for i = {bad})")
    if method == "III" and not any(v):
        raise PreconditionError("Construction III requires some v_i = <u, r_i> to be nonzero")


def construct(
    method: Method,
    c: ECode,
    u: BitVector | str,
    *,
    residue_generator: BitMatrix | None = None,
    literal_third: bool = False,
) -> BuildOutput:
    """Apply construction ``method`` to the free code ``c`` with vector ``u``.

    ``residue_generator`` fixes the rows r_i (the v_i depend on the choice of
    basis); by default the kappa-generators the code was built from are used
    when available, otherwise the RREF residue basis.  ``literal_third``
    reproduces the Construction III matrix with v_1 repeated in every row.
    """
    if method not in METHODS:
        raise ValueError(f"unknown construction {method!r}")
    if isinstance(u, str):
        u = BitVector.from_str(u)
    if not is_free(c):
        raise NotFreeError(f"Construction {method} needs a free input code")
    n = c.n
    if u.length != n:
        raise PreconditionError(f"u has length {u.length}, code has length {n}")
    g = residue_generator if residue_generator is not None else _default_residue_generator(c)
    if g.ncols != n or not gf2.row_space_equal(g, residue(c)) or gf2.rank(g) != g.nrows:
        raise ValueError("residue_generator must be a basis of the residue code")
    h = gf2.nullspace(g)
    v = [u.dot(r) for r in g.rows]
    w = [u.dot(s) for s in h.rows]
    _check(method, u, g, v)
    l = hull_rank(c)

    g0, h0 = _first_rows(method, u.data)
    v1 = v[0] if v else 0
    g_rows = [g0] + [_extend(_g_row_head(method, vi, v1, literal_third), r) for vi, r in zip(v, g.rows)]
    h_rows = [h0] + [_extend(_h_row_head(method, wj), s) for wj, s in zip(w, h.rows)]
    g1 = BitMatrix.from_rows(g_rows, n + 2)
    h1 = BitMatrix.from_rows(h_rows, n + 2)

    gen = EMatrix.kappa_times(g1)
    par = EMatrix.kappa_times(h1)
    out_code = from_generators(gen)
    if gf2.rank(g1) != g.nrows + 1:
        raise ConstructionMismatch(f"Construction {method} output does not have rank k+1")
    got = g1.nrows - gf2.rank(gf2.mul_transpose(g1, g1))
    predicted = _predicted(method, l)
    if got not in predicted and not literal_third:
        raise ConstructionMismatch(
            f"Construction {method}: recomputed hull-rank {got} not in {sorted(predicted)}"
        )
    return BuildOutput(out_code, gen, par, l, got, predicted, tuple(v), tuple(w))


def _default_residue_generator(c: ECode) -> BitMatrix:
    src = c.source_generators
    if src is not None and not any(src.V.rows) and gf2.rank(src.U) == src.nrows:
        return src.U
    return residue(c)


def construct_I(c: ECode, u, **kw) -> BuildOutput:
    return construct("I", c, u, **kw)


def construct_II(c: ECode, u, **kw) -> BuildOutput:
    return construct("II", c, u, **kw)


def construct_III(c: ECode, u, **kw) -> BuildOutput:
    return construct("III", c, u, **kw)


def construct_IV(c: ECode, u, **kw) -> BuildOutput:
    return construct("IV", c, u, **kw)


def validate_parity_check(out: BuildOutput) -> bool:
    """True iff the parity-check matrix generates the two-sided dual of the output."""
    if out.parity_check.ncols != out.code.n:
        return False
    return from_generators(out.parity_check) == dual(out.code)


def two_sided_orthogonal(g: EMatrix, h: EMatrix) -> bool:
    return all(
        e_inner(a, b) == 0 and e_inner(b, a) == 0 for a in g.vectors() for b in h.vectors()
    )

