"""Arithmetic of the four-element non-unital ring E = <kappa, tau>.

Every element is written x = u*kappa + v*zeta with bits (u, v), so
kappa = (1, 0), zeta = (0, 1), tau = kappa + zeta = (1, 1).  Addition is
XOR of the pairs and the product has the closed form
(u1, v1)(u2, v2) = (u1*u2, v1*u2).

Vectors and matrices over E are kept as two GF(2) planes: a U-plane of
u-bits and a V-plane of v-bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

from .gf2 import BitMatrix, DimensionError, parity, permute_bits


class EElem(IntEnum):
    # value = u | (v << 1)
    ZERO = 0
    KAPPA = 1
    ZETA = 2
    TAU = 3

    @property
    def u(self) -> int:
        return self.value & 1

    @property
    def v(self) -> int:
        return self.value >> 1

    @classmethod
    def from_uv(cls, u: int, v: int) -> "EElem":
        return cls((u & 1) | ((v & 1) << 1))

    @property
    def symbol(self) -> str:
        return _SYMBOL_OF[self]

    def __add__(self, other):
        if isinstance(other, EElem):
            return e_add(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, EElem):
            return e_mul(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return self.symbol


ZERO, KAPPA, ZETA, TAU = EElem.ZERO, EElem.KAPPA, EElem.ZETA, EElem.TAU
ELEMENTS = (ZERO, KAPPA, TAU, ZETA)

_SYMBOL_OF = {ZERO: "0", KAPPA: "k", TAU: "t", ZETA: "z"}
_ELEM_OF = {s: e for e, s in _SYMBOL_OF.items()}


def e_add(x: EElem, y: EElem) -> EElem:
    return EElem(x.value ^ y.value)


def e_mul(x: EElem, y: EElem) -> EElem:
    return EElem.from_uv(x.u & y.u, x.v & y.u)


def pi(x: EElem) -> int:
    """Reduction modulo the maximal ideal {0, zeta}."""
    return x.u


def parse_symbol(c: str) -> EElem:
    try:
        return _ELEM_OF[c]
    except KeyError:
        raise ValueError(f"unknown ring symbol {c!r}; expected one of 0, k, t, z") from None


def format_symbol(x: EElem) -> str:
    return _SYMBOL_OF[EElem(x)]


@dataclass(frozen=True)
class EVector:
    """A vector in E^n as a pair of bit planes."""

    n: int
    u: int = 0
    v: int = 0

    @classmethod
    def from_elems(cls, elems: Sequence[EElem]) -> "EVector":
        u = v = 0
        for j, x in enumerate(elems):
            x = EElem(x)
            u |= x.u << j
            v |= x.v << j
        return cls(len(elems), u, v)

    @classmethod
    def parse(cls, s: str) -> "EVector":
        return cls.from_elems([parse_symbol(c) for c in s.replace(" ", "")])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> EElem:
        return EElem.from_uv((self.u >> j) & 1, (self.v >> j) & 1)

    def elems(self) -> list[EElem]:
        return [self[j] for j in range(self.n)]

    def __add__(self, other: "EVector") -> "EVector":
        if self.n != other.n:
            raise DimensionError("length mismatch")
        return EVector(self.n, self.u ^ other.u, self.v ^ other.v)

    def scale(self, a: EElem) -> "EVector":
        """Left multiplication a*x, componentwise."""
        a = EElem(a)
        return EVector(self.n, self.u if a.u else 0, self.u if a.v else 0)

    def weight(self) -> int:
        return (self.u | self.v).bit_count()

    def permute(self, perm: Sequence[int]) -> "EVector":
        return EVector(self.n, permute_bits(self.u, perm), permute_bits(self.v, perm))

    def doubled(self) -> int:
        """Row in doubled coordinates: U-plane low n bits, V-plane high n bits."""
        return self.u | (self.v << self.n)

    @classmethod
    def from_doubled(cls, row: int, n: int) -> "EVector":
        mask = (1 << n) - 1
        return cls(n, row & mask, row >> n)

    def __str__(self) -> str:
        return "".join(self[j].symbol for j in range(self.n))


def e_inner(w: EVector, z: EVector) -> EElem:
    """<w, z> = sum_j w_j z_j; closed form (sum u_w u_z, sum v_w u_z)."""
    if w.n != z.n:
        raise DimensionError(f"inner product of lengths {w.n} and {z.n}")
    return EElem.from_uv(parity(w.u & z.u), parity(w.v & z.u))


@dataclass(frozen=True)
class EMatrix:
    """Matrix over E stored as U and V bit planes of equal shape."""

    U: BitMatrix
    V: BitMatrix

    def __post_init__(self):
        if (self.U.nrows, self.U.ncols) != (self.V.nrows, self.V.ncols):
            raise DimensionError("U and V planes differ in shape")

    @property
    def nrows(self) -> int:
        return self.U.nrows

    @property
    def ncols(self) -> int:
        return self.U.ncols

    @classmethod
    def from_vectors(cls, vecs: Iterable[EVector], ncols: int) -> "EMatrix":
        vecs = list(vecs)
        for x in vecs:
            if x.n != ncols:
                raise DimensionError("row length mismatch")
        return cls(
            BitMatrix.from_rows((x.u for x in vecs), ncols),
            BitMatrix.from_rows((x.v for x in vecs), ncols),
        )

    @classmethod
    def kappa_times(cls, g: BitMatrix) -> "EMatrix":
        """kappa*G for a binary matrix G."""
        return cls(g, BitMatrix.zeros(g.nrows, g.ncols))

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "EMatrix":
        vecs = [EVector.parse(r) for r in rows]
        if not vecs:
            raise ValueError("cannot infer width from zero rows")
        return cls.from_vectors(vecs, vecs[0].n)

    @classmethod
    def empty(cls, ncols: int) -> "EMatrix":
        return cls(BitMatrix.empty(ncols), BitMatrix.empty(ncols))

    def row(self, i: int) -> EVector:
        return EVector(self.ncols, self.U.rows[i], self.V.rows[i])

    def vectors(self) -> list[EVector]:
        return [self.row(i) for i in range(self.nrows)]

    def __getitem__(self, ij: tuple[int, int]) -> EElem:
        i, j = ij
        return self.row(i)[j]

    def residue(self) -> BitMatrix:
        return self.U

    def to_strings(self, sep: str = " ") -> list[str]:
        return [sep.join(x.symbol for x in r.elems()) for r in self.vectors()]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def parse_ematrix(text: str) -> EMatrix:
    """Parse the ``E <rows> <cols>`` text format.

    Symbols are 0, k, t, z; separators between symbols are optional.
    Errors report the 1-based line and column of the first offending symbol.
    """
    raw = text.splitlines()
    numbered = [(i + 1, ln.strip()) for i, ln in enumerate(raw)]
    numbered = [(i, ln) for i, ln in numbered if ln and not ln.startswith("#")]
    if not numbered:
        raise ValueError("empty E-matrix text")
    lineno, head_line = numbered[0]
    head = head_line.split()
    if len(head) != 3 or head[0] != "E":
        raise ValueError(f"line {lineno}: expected header 'E <rows> <cols>', got {head_line!r}")
    try:
        nr, nc = int(head[1]), int(head[2])
    except ValueError:
        raise ValueError(f"line {lineno}: non-integer dimensions in {head_line!r}") from None
    if nr < 0 or nc < 0:
        raise ValueError(f"line {lineno}: negative dimensions")
    body = numbered[1:]
    if len(body) != nr:
        raise ValueError(f"expected {nr} rows after header, found {len(body)}")
    vecs = []
    for lineno, ln in body:
        elems = []
        col = 0
        for pos, ch in enumerate(ln):
            if ch in " \t":
                continue
            col += 1
            if ch not in _ELEM_OF:
                raise ValueError(f"line {lineno}, column {pos + 1}: bad symbol {ch!r}")
            elems.append(_ELEM_OF[ch])
        if len(elems) != nc:
            raise ValueError(f"line {lineno}: expected {nc} symbols, found {len(elems)}")
        vecs.append(EVector.from_elems(elems))
    return EMatrix.from_vectors(vecs, nc)


def emit_ematrix(m: EMatrix) -> str:
    return "\n".join([f"E {m.nrows} {m.ncols}", *m.to_strings()]) + "\n"
