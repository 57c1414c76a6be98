"""Entropy and compression of a singular-value spectrum."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import UndefinedMeasureError
from .matrix import IntSquareMatrix


@dataclass(frozen=True)
class MeasureReport:
    normalized: tuple[float, ...]
    H: float
    C: float


def entropy_compression(sigmas: Sequence[float], n: int) -> MeasureReport:
    """Shannon entropy (nats) of the sum-normalized SVs and ``C = (1 - H/ln n) * 100``.

    Zero singular values contribute nothing (0 ln 0 = 0), so padding a
    spectrum with zeros does not change the result.
    """
    total = math.fsum(sigmas)
    if total <= 0:
        raise UndefinedMeasureError("entropy undefined for an all-zero spectrum")
    if n < 2:
        raise UndefinedMeasureError("compression undefined for order < 2")
    p = tuple(s / total for s in sigmas)
    H = -math.fsum(x * math.log(x) for x in p if x > 0)
    H = max(H, 0.0)
    C = (1.0 - H / math.log(n)) * 100.0
    return MeasureReport(p, H, C)


def zero_based_shift(mat: IntSquareMatrix) -> IntSquareMatrix:
    return mat - 1
