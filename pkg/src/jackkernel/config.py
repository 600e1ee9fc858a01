"""Size guards shared by the library and the command line."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    max_weight: int = 6  # |lambda| for Jack constructions
    max_ribbon_length: int = 7  # sum of l_i for ribbon expansions
    max_rects: int = 2  # number k of rectangles
    young_max: int = 6  # factorial blow-up guard for Young's formula
    tau_max: int = 5  # partition-sum route of tau_b

    @classmethod
    def from_env(cls) -> "Limits":
        lim = cls()
        raw = os.environ.get("JACKKERNEL_MAX_WEIGHT")
        if raw:
            lim = replace(lim, max_weight=int(raw))
        return lim


LIMITS = Limits.from_env()
