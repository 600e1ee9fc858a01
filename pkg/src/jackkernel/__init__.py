"""Jack polynomials, Jack characters and their combinatorics with exact arithmetic."""

from .arith import ALPHA, B_RING, SQRT, LocRing, MultiPolyLoc, RatFunc, UniPoly
from .symfun import PSPoly, CatPoly, BiPSPoly, partitions
from .jack import jack_polynomial, jack_character, normalized_character

__all__ = [
    "ALPHA", "B_RING", "SQRT", "LocRing", "MultiPolyLoc", "RatFunc", "UniPoly",
    "PSPoly", "CatPoly", "BiPSPoly", "partitions",
    "jack_polynomial", "jack_character", "normalized_character",
]
