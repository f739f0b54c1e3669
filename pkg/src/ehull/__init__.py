"""Linear codes over the non-unital ring E of order 4: duals, hulls, build-up constructions, classification."""

from .code import (
    CodeSummary,
    ECode,
    NotFreeError,
    dual,
    from_generators,
    hull,
    hull_generator_free,
    hull_rank,
    is_free,
    left_dual,
    lhull,
    min_distance,
    residue,
    rhull,
    right_dual,
    summarize,
    torsion,
)
from .gf2 import BitMatrix, BitVector
from .ring import EElem, EMatrix, EVector, e_add, e_inner, e_mul, emit_ematrix, parse_ematrix, pi

__version__ = "0.1.0"

__all__ = [
    "CodeSummary",
    "ECode",
    "NotFreeError",
    "dual",
    "from_generators",
    "hull",
    "hull_generator_free",
    "hull_rank",
    "is_free",
    "left_dual",
    "lhull",
    "min_distance",
    "residue",
    "rhull",
    "right_dual",
    "summarize",
    "torsion",
    "BitMatrix",
    "BitVector",
    "EElem",
    "EMatrix",
    "EVector",
    "e_add",
    "e_inner",
    "e_mul",
    "emit_ematrix",
    "parse_ematrix",
    "pi",
]
