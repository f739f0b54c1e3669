"""Exhaustive classification of free E-linear codes by hull-rank.

Free codes of length n and rank k correspond one-to-one to k-dimensional
binary residue codes (the code is kappa*G for any residue generator G),
and both hull-rank and minimum distance are residue quantities.  The scan
therefore runs over binary subspaces, each visited once through its unique
RREF, and lifts the optimal ones at the end.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Iterator, Optional

from . import gf2
from .code import free_code, hull_rank, is_free, min_distance, from_generators, residue
from .equivalence import binary_equivalent, invariant_key
from .gf2 import BitMatrix
from .ring import EMatrix, parse_ematrix

log = logging.getLogger(__name__)

MAX_N = 8


class RangeError(ValueError):
    pass


def q_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def pivot_sets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def subspaces_with_pivots(n: int, pivots: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every RREF basis with the given pivot columns.

    Row i may carry a 1 only in non-pivot columns to the right of its pivot.
    Fillings are enumerated by an integer counter over the free slots.
    """
    pset = set(pivots)
    slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pset]
    base = [1 << p for p in pivots]
    f = len(slots)
    if f == 0:
        yield tuple(base)
        return
    for mask in range(1 << f):
        rows = base[:]
        m = mask
        while m:
            low = m & -m
            i, c = slots[low.bit_length() - 1]
            rows[i] |= 1 << c
            m ^= low
        yield tuple(rows)


def enumerate_binary_subspaces(n: int, k: int) -> Iterator[BitMatrix]:
    """Every k-dimensional subspace of GF(2)^n exactly once, as an RREF basis."""
    if not (0 <= k <= n <= MAX_N):
        raise RangeError(f"need 0 <= k <= n <= {MAX_N}, got n={n}, k={k}")
    for p in pivot_sets(n, k):
        for rows in subspaces_with_pivots(n, p):
            yield BitMatrix(k, n, rows)


def _hull_dim(rows: tuple[int, ...]) -> int:
    gram = []
    for a in rows:
        v = 0
        for j, b in enumerate(rows):
            if (a & b).bit_count() & 1:
                v |= 1 << j
        gram.append(v)
    return len(rows) - gf2.rank_rows(gram)


def _min_weight(rows: tuple[int, ...]) -> int:
    return gf2.min_weight_rows(rows) if rows else 0


@dataclass
class CellStats:
    count: int = 0
    best_d: int = -1
    per_d: Counter = field(default_factory=Counter)
    optimal: list = field(default_factory=list)

    def merge(self, other: "CellStats", keep: bool) -> None:
        self.count += other.count
        self.per_d.update(other.per_d)
        if other.best_d > self.best_d:
            self.best_d = other.best_d
            self.optimal = list(other.optimal) if keep else []
        elif other.best_d == self.best_d and keep:
            self.optimal.extend(other.optimal)


def _scan_chunk(args) -> dict[int, CellStats]:
    n, chunk, collect = args
    out: dict[int, CellStats] = {}
    for p in chunk:
        for rows in subspaces_with_pivots(n, p):
            l = _hull_dim(rows)
            d = _min_weight(rows)
            st = out.get(l)
            if st is None:
                st = out[l] = CellStats()
            st.count += 1
            st.per_d[d] += 1
            if d > st.best_d:
                st.best_d = d
                st.optimal = [rows] if l in collect else []
            elif d == st.best_d and l in collect:
                st.optimal.append(rows)
    return out


def scan(n: int, k: int, collect: frozenset[int] = frozenset(), workers: int = 1) -> dict[int, CellStats]:
    """Hull-rank/distance statistics for every free [n, k] code.

    Optimal residue bases are kept for the hull-ranks in ``collect``.  The
    work is split by pivot-column set; the merged result does not depend on
    the number of workers.
    """
    if not (0 <= k <= n <= MAX_N):
        raise RangeError(f"need 0 <= k <= n <= {MAX_N}, got n={n}, k={k}")
    psets = pivot_sets(n, k)
    nchunks = max(1, min(len(psets), 4 * workers))
    chunks = [psets[i::nchunks] for i in range(nchunks)]
    jobs = [(n, ch, frozenset(collect)) for ch in chunks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, jobs))
    else:
        parts = [_scan_chunk(j) for j in jobs]
    total: dict[int, CellStats] = {}
    for part in parts:
        for l, st in part.items():
            total.setdefault(l, CellStats()).merge(st, l in collect)
    for st in total.values():
        st.optimal.sort()
    return dict(sorted(total.items()))


@lru_cache(maxsize=None)
def _full_scan(n: int, k: int, workers: int) -> dict[int, CellStats]:
    # one pass per (n, k) serves every hull-rank; callers must not mutate it
    return scan(n, k, collect=frozenset(range(k + 1)), workers=workers)


def census(n: int, k: int, workers: int = 1) -> dict[int, tuple[int, int]]:
    """Map hull-rank l -> (number of free [n,k] codes, best distance).

    Best distance is 0 for k = 0 (only the zero code).
    """
    return {l: (st.count, st.best_d) for l, st in _full_scan(n, k, workers).items()}


def optimal_distance(n: int, k: int, l: int, workers: int = 1) -> Optional[int]:
    entry = census(n, k, workers).get(l)
    return None if entry is None else entry[1]


@dataclass
class ClassRecord:
    n: int
    k: int
    hull_rank: int
    optimal_d: Optional[int]
    representatives: list[EMatrix]
    examined_count: int
    per_d: dict[int, int]
    optimal_count: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "hull_rank": self.hull_rank,
            "optimal_d": self.optimal_d,
            "optimal_count": self.optimal_count,
            "classes": len(self.representatives),
            "census": {
                "examined_count": self.examined_count,
                "per_d": {str(d): c for d, c in sorted(self.per_d.items())},
            },
            "representatives": [m.to_strings(sep="") for m in self.representatives],
        }


def dedupe(bases: list[tuple[int, ...]], n: int) -> list[BitMatrix]:
    """Pairwise inequivalent representatives, first-seen order."""
    buckets: dict[tuple, list[BitMatrix]] = {}
    reps: list[BitMatrix] = []
    for rows in bases:
        g = BitMatrix(len(rows), n, rows)
        key = invariant_key(g)
        bucket = buckets.setdefault(key, [])
        if any(binary_equivalent(g, r) is not None for r in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


def classify(n: int, k: int, l: int, workers: int = 1) -> ClassRecord:
    """Optimal distance and inequivalent optimal codes among free [n,k] codes of hull-rank l."""
    if not (1 <= l <= k <= n <= MAX_N):
        raise RangeError(f"need 1 <= l <= k <= n <= {MAX_N}, got n={n}, k={k}, l={l}")
    st = _full_scan(n, k, workers).get(l)
    if st is None:
        return ClassRecord(n, k, l, None, [], 0, {}, 0)
    reps = dedupe(st.optimal, n)
    lifted = [EMatrix.kappa_times(g) for g in reps]
    for m in lifted:
        c = free_code(m.U)
        if hull_rank(c) != l or min_distance(c) != st.best_d or residue(c).nrows != k:
            raise AssertionError("lifted representative lost its parameters")
    log.info("classified [%d,%d] l=%d: d=%d, %d optimal, %d classes", n, k, l, st.best_d, len(st.optimal), len(reps))
    return ClassRecord(n, k, l, st.best_d, lifted, st.count, dict(st.per_d), len(st.optimal))


# --- table fixture --------------------------------------------------------


@dataclass(frozen=True)
class FixtureEntry:
    generator: EMatrix
    n: int
    k: int
    d: int
    l: int
    table: str
    line: int


def parse_fixture(text: str) -> list[FixtureEntry]:
    """Blocks of an E-matrix followed by ``expect n=.. k=.. d=.. l=.. table=..``."""
    entries = []
    block: list[str] = []
    start = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln.startswith("expect"):
            fields = dict(tok.split("=", 1) for tok in ln.split()[1:])
            missing = {"n", "k", "d", "l", "table"} - fields.keys()
            if missing:
                raise ValueError(f"line {lineno}: expect line lacks {sorted(missing)}")
            try:
                m = parse_ematrix("\n".join(block))
            except ValueError as exc:
                raise ValueError(f"block starting at line {start}: {exc}") from None
            e = FixtureEntry(m, int(fields["n"]), int(fields["k"]), int(fields["d"]), int(fields["l"]), fields["table"], start)
            if (m.nrows, m.ncols) != (e.k, e.n):
                raise ValueError(f"line {start}: matrix is {m.nrows}x{m.ncols}, expected {e.k}x{e.n}")
            entries.append(e)
            block = []
        else:
            if not block:
                start = lineno
            block.append(ln)
    if block:
        raise ValueError(f"line {start}: matrix block without an expect line")
    return entries


def default_fixture_text() -> str:
    return resources.files("ehull.data").joinpath("optimal_tables.txt").read_text()


def load_fixture(path: Optional[str] = None) -> list[FixtureEntry]:
    if path is None:
        return parse_fixture(default_fixture_text())
    with open(path) as fh:
        return parse_fixture(fh.read())


@dataclass
class Finding:
    level: str  # PASS, WARN, FAIL
    table: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.level} {self.table} line {self.line}: {self.message}"


@dataclass
class TableReport:
    findings: list[Finding]
    cells: dict[tuple[int, int, int], dict]

    @property
    def fails(self) -> list[Finding]:
        return [f for f in self.findings if f.level == "FAIL"]

    @property
    def warns(self) -> list[Finding]:
        return [f for f in self.findings if f.level == "WARN"]

    @property
    def ok(self) -> bool:
        return not self.fails


def verify_tables(
    entries: list[FixtureEntry],
    *,
    optimality: bool = True,
    class_counts: bool = False,
    workers: int = 1,
) -> TableReport:
    """Recompute every fixture entry and compare with its claims.

    Per entry: (n, k, d, l) recomputed, and d checked against the exhaustive
    optimum.  Per cell: listed codes pairwise inequivalent.  With
    ``class_counts`` the number of listed codes is compared with the number
    of inequivalent optima (WARN only).
    """
    findings: list[Finding] = []
    by_cell: dict[tuple[int, int, int], list[tuple[FixtureEntry, BitMatrix]]] = {}
    for e in entries:
        c = from_generators(e.generator)
        claim = f"[{e.n},{e.k},{e.d}] l={e.l}"
        if not is_free(c):
            findings.append(Finding("FAIL", e.table, e.line, f"{claim}: code is not free"))
            continue
        res = residue(c)
        got = (c.n, res.nrows, min_distance(c), hull_rank(c))
        if got != (e.n, e.k, e.d, e.l):
            findings.append(Finding("FAIL", e.table, e.line, f"{claim}: recomputed [{got[0]},{got[1]},{got[2]}] l={got[3]}"))
            continue
        msg = f"{claim} recomputed"
        if optimality:
            opt = optimal_distance(e.n, e.k, e.l, workers)
            if opt != e.d:
                findings.append(Finding("FAIL", e.table, e.line, f"{claim}: exhaustive optimum is d={opt}"))
                continue
            msg += ", optimal"
        findings.append(Finding("PASS", e.table, e.line, msg))
        by_cell.setdefault((e.n, e.k, e.l), []).append((e, res))

    cells: dict[tuple[int, int, int], dict] = {}
    for key, items in sorted(by_cell.items()):
        info = {"listed": len(items)}
        distinct = len(items)
        for j in range(len(items)):
            for i in range(j):
                (ei, gi), (ej, gj) = items[i], items[j]
                perm = binary_equivalent(gi, gj)
                if perm is not None:
                    findings.append(
                        Finding("FAIL", ej.table, ej.line, f"[{key[0]},{key[1]}] l={key[2]}: equivalent to entry at line {ei.line} via {perm.cycle_string()}")
                    )
                    distinct -= 1
                    break
        info["distinct"] = distinct
        if class_counts:
            rec = classify(*key, workers=workers)
            info["classes"] = len(rec.representatives)
            info["optimal_codes"] = rec.optimal_count
            if len(rec.representatives) != distinct:
                findings.append(
                    Finding("WARN", items[0][0].table, items[0][0].line,
                            f"[{key[0]},{key[1]},{rec.optimal_d}] l={key[2]}: {distinct} inequivalent codes listed, {len(rec.representatives)} exist")
                )
        cells[key] = info
    return TableReport(findings, cells)
