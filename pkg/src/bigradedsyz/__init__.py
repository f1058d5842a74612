"""Exact syzygies, Hilbert functions and minimal free resolutions for ideals
generated by three bidegree-(2,1) forms on P1 x P1."""

from .bipoly import BiDeg, BiHomPoly, InputTriple, W, X, Y, Z, dim_R
from .classify import bezout_matrix, classify, resultant_21
from .hilbert import InstanceClass, dim_table, e2_pred, h_I_pred, h_syz_pred
from .instances import monomial_nongeneric, gen_instance, parse_instance, three_point
from .resolution import build_resolution, verify_complex
from .syzygy import (
    SyzTriple, check_generation, ideal_dim, min_generators, syz_basis, syz_dim, syzygy_23,
)

__version__ = "0.1.0"


def clear_caches():
    """Drop every memoized matrix (for cold-start timings)."""
    import importlib

    bp, cl, sz = (importlib.import_module(f"{__name__}.{m}") for m in ("bipoly", "classify", "syzygy"))
    for f in (bp._mult_matrix, cl.bezout_matrix, cl.classify, sz.syz_matrix, sz.koszul_matrix):
        f.cache_clear()


__all__ = [
    "clear_caches", "BiDeg", "BiHomPoly", "InputTriple", "W", "X", "Y", "Z", "dim_R",
    "bezout_matrix", "classify", "resultant_21",
    "InstanceClass", "dim_table", "e2_pred", "h_I_pred", "h_syz_pred",
    "monomial_nongeneric", "gen_instance", "parse_instance", "three_point",
    "build_resolution", "verify_complex",
    "SyzTriple", "check_generation", "ideal_dim", "min_generators", "syz_basis", "syz_dim",
    "syzygy_23",
]
