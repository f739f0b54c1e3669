"""Bit-packed linear algebra over GF(2).

Rows are Python ints used as bitsets: bit ``j`` of a row is column ``j``.
Column 0 is the leftmost character in the text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_COLS = 64


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible."""


class ZeroCodeError(ValueError):
    """Raised when an operation needs at least one nonzero codeword."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_to_str(row: int, ncols: int) -> str:
    return "".join("1" if (row >> j) & 1 else "0" for j in range(ncols))


def str_to_bits(s: str) -> int:
    row = 0
    for j, ch in enumerate(s):
        if ch == "1":
            row |= 1 << j
        elif ch != "0":
            raise ValueError(f"bad bit {ch!r} at column {j}")
    return row


@dataclass(frozen=True)
class BitVector:
    length: int
    data: int = 0

    def __post_init__(self):
        if self.data >> self.length:
            raise ValueError("pad bits beyond length must be zero")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        s = s.strip()
        return cls(len(s), str_to_bits(s))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        return cls(len(bits), sum((b & 1) << j for j, b in enumerate(bits)))

    def __getitem__(self, j: int) -> int:
        return (self.data >> j) & 1

    def __len__(self) -> int:
        return self.length

    def dot(self, other: "BitVector | int") -> int:
        o = other.data if isinstance(other, BitVector) else other
        return parity(self.data & o)

    def weight(self) -> int:
        return self.data.bit_count()

    def __str__(self) -> str:
        return bits_to_str(self.data, self.length)


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix stored as a tuple of int rows."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.ncols < 0 or self.ncols > MAX_COLS:
            raise DimensionError(f"column count {self.ncols} outside [0, {MAX_COLS}]")
        if len(self.rows) != self.nrows:
            raise DimensionError("row count does not match data")
        mask = ~((1 << self.ncols) - 1)
        for r in self.rows:
            if r & mask or r < 0:
                raise ValueError("pad bits beyond ncols must be zero")

    @classmethod
    def from_rows(cls, rows: Iterable[int], ncols: int) -> "BitMatrix":
        rows = tuple(rows)
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BitMatrix":
        lines = [ln.strip() for ln in lines if ln.strip()]
        if not lines:
            raise ValueError("cannot infer width from zero rows")
        width = len(lines[0])
        if any(len(ln) != width for ln in lines):
            raise DimensionError("ragged rows")
        return cls.from_rows((str_to_bits(ln) for ln in lines), width)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def empty(cls, ncols: int) -> "BitMatrix":
        return cls(0, ncols, ())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    c |= 1 << i
            cols.append(c)
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise DimensionError("stacking needs equal column counts")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def permute_columns(self, perm: Sequence[int]) -> "BitMatrix":
        """Column ``j`` of the input becomes column ``perm[j]``."""
        return BitMatrix(self.nrows, self.ncols, tuple(permute_bits(r, perm) for r in self.rows))

    def to_strings(self) -> list[str]:
        return [bits_to_str(r, self.ncols) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def permute_bits(row: int, perm: Sequence[int]) -> int:
    out = 0
    for j, pj in enumerate(perm):
        if (row >> j) & 1:
            out |= 1 << pj
    return out


def _echelon(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    # Fully reduced; pivot is the lowest set bit (leftmost column).
    work = [r for r in rows if r]
    pivots: list[int] = []
    out: list[int] = []
    for col in range(ncols):
        bit = 1 << col
        for idx, r in enumerate(work):
            if r & bit:
                break
        else:
            continue
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return out, pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int], int]:
    """Reduced row echelon form with zero rows removed.

    Returns ``(reduced, pivot_columns, rank)``.
    """
    out, pivots = _echelon(m.rows, m.ncols)
    return BitMatrix.from_rows(out, m.ncols), pivots, len(pivots)


def rank_rows(rows: Iterable[int]) -> int:
    """Rank of a list of int rows (XOR basis by leading bit)."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            hb = r.bit_length() - 1
            b = basis.get(hb)
            if b is None:
                basis[hb] = r
                break
            r ^= b
    return len(basis)


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def mul_transpose(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """``a @ b.T`` over GF(2)."""
    if a.ncols != b.ncols:
        raise DimensionError(f"cannot form a·bᵀ with {a.ncols} vs {b.ncols} columns")
    out = []
    for ra in a.rows:
        v = 0
        for j, rb in enumerate(b.rows):
            if (ra & rb).bit_count() & 1:
                v |= 1 << j
        out.append(v)
    return BitMatrix(a.nrows, b.nrows, tuple(out))


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of ``{v : m·vᵀ = 0}``, one basis vector per free column."""
    red, pivots, _ = rref(m)
    n = m.ncols
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = 1 << f
        for r, p in zip(red.rows, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix.from_rows(basis, n)


def span_contains(basis: BitMatrix, v: int) -> bool:
    return rank_rows(basis.rows + (v,)) == rank(basis)


def intersect_row_spaces(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Basis of rowspace(a) ∩ rowspace(b), in RREF.

    Zassenhaus: reduce ``[a | a ; b | 0]``; rows whose left half vanishes
    carry the intersection in their right half.
    """
    if a.ncols != b.ncols:
        raise DimensionError(f"cannot intersect {a.ncols}- and {b.ncols}-column spaces")
    n = a.ncols
    if n == 0:
        return BitMatrix.empty(0)
    rows = [r | (r << n) for r in a.rows] + list(b.rows)
    out, pivots = _echelon(rows, 2 * n)
    inter = [r >> n for r, p in zip(out, pivots) if p >= n]
    return rref(BitMatrix.from_rows(inter, n))[0]


def row_space_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.ncols != b.ncols:
        raise DimensionError(f"cannot compare {a.ncols}- and {b.ncols}-column spaces")
    return rref(a)[0].rows == rref(b)[0].rows


def row_space_contains(big: BitMatrix, small: BitMatrix) -> bool:
    if big.ncols != small.ncols:
        raise DimensionError("column mismatch")
    r = rank(big)
    return rank_rows(big.rows + small.rows) == r


def span_sum(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return rref(a.stack(b))[0]


def iter_codewords(rows: Sequence[int]) -> Iterable[int]:
    """All 2^k combinations of independent rows, in Gray-code order."""
    c = 0
    yield c
    for i in range(1, 1 << len(rows)):
        c ^= rows[(i & -i).bit_length() - 1]
        yield c


def min_weight_rowspace(g: BitMatrix) -> int:
    """Minimum Hamming weight over the nonzero vectors of rowspace(g)."""
    red, _, k = rref(g)
    if k == 0:
        raise ZeroCodeError("zero code has no minimum distance")
    return min_weight_rows(red.rows)


def min_weight_rows(rows: Sequence[int]) -> int:
    # rows must be linearly independent
    best = min(r.bit_count() for r in rows)
    c = 0
    for i in range(1, 1 << len(rows)):
        c ^= rows[(i & -i).bit_length() - 1]
        w = c.bit_count()
        if w < best:
            best = w
    return best


def weight_distribution(rows: Sequence[int], ncols: int) -> list[int]:
    red = _echelon(rows, ncols)[0]
    counts = [0] * (ncols + 1)
    for c in iter_codewords(red):
        counts[c.bit_count()] += 1
    return counts


def parse_gf2(text: str) -> BitMatrix:
    """Parse the ``GF2 <rows> <cols>`` text format.

    Blank lines and ``#`` comments are skipped; errors carry the line
    number in the original text.
    """
    numbered = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    numbered = [(i, ln) for i, ln in numbered if ln and not ln.startswith("#")]
    if not numbered:
        raise ValueError("empty GF2 matrix text")
    lineno, head_line = numbered[0]
    head = head_line.split()
    if len(head) != 3 or head[0] != "GF2":
        raise ValueError(f"line {lineno}: expected header 'GF2 <rows> <cols>', got {head_line!r}")
    try:
        nr, nc = int(head[1]), int(head[2])
    except ValueError:
        raise ValueError(f"line {lineno}: non-integer dimensions in {head_line!r}") from None
    body = numbered[1:]
    if len(body) != nr:
        raise ValueError(f"expected {nr} rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        col = 0
        for pos, ch in enumerate(ln):
            if ch in " \t":
                continue
            col += 1
            if ch not in "01":
                raise ValueError(f"line {lineno}, column {pos + 1}: bad symbol {ch!r}")
        if col != nc:
            raise ValueError(f"line {lineno}: expected {nc} columns, found {col}")
        rows.append(str_to_bits(ln.replace(" ", "").replace("\t", "")))
    return BitMatrix.from_rows(rows, nc)


def format_gf2(m: BitMatrix) -> str:
    return "\n".join([f"GF2 {m.nrows} {m.ncols}", *m.to_strings()]) + "\n"
