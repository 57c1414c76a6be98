"""Enumerating canonical-natural Frierson squares, their clans and counts."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

from .construction import Couple, FriersonSpec
from .errors import InvalidLevelError
from .measures import entropy_compression
from .spectra import closed_form_svs, closed_form_svs_mppd

MAX_ENUM_LEVEL = 6
MAX_SERIES_LEVEL = 8

# OEIS prefixes, leading terms dropped so index 0 is level 1
A000384 = (1, 6, 15, 28, 45, 66, 91)                      # hexagonal numbers l(2l-1)
A000680 = (1, 6, 90, 2520, 113400, 7484400, 681080400)    # (2l)!/2^l
A001147 = (1, 3, 15, 105, 945, 10395, 135135)             # (2l-1)!!
A052386 = (0, 9, 90, 819, 7380, 66429, 597870)            # integers < 10^(l) lacking digit 0


def powers(l: int) -> list[int]:
    return [3**i for i in range(2 * l)]


def _check_level(l: int, cap: int = MAX_ENUM_LEVEL) -> None:
    if not 1 <= l <= cap:
        raise InvalidLevelError(f"level must be in 1..{cap}, got {l}")


@dataclass(frozen=True, order=True)
class ClanKey:
    """Unordered set of unordered couples; squares sharing one share a spectrum."""

    couples: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, couples) -> "ClanKey":
        return cls(tuple(sorted(tuple(sorted(c)) for c in couples)))

    @classmethod
    def from_spec(cls, spec: FriersonSpec) -> "ClanKey":
        return cls.of(tuple(c) for c in spec.couples)

    @property
    def level(self) -> int:
        return len(self.couples)

    def spec(self, k: int = 1) -> FriersonSpec:
        """One representative spec (couples in key order)."""
        return FriersonSpec.of(k, *self.couples)

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.couples) + "}"


def _matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner), *tail]


def _assignments(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Ordered sequences of disjoint pairs covering ``items`` (pairs unordered)."""
    if not items:
        yield []
        return
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            rest = [x for t, x in enumerate(items) if t != i and t != j]
            for tail in _assignments(rest):
                yield [(items[i], items[j]), *tail]


def enumerate_assignments(l: int) -> list[FriersonSpec]:
    """All (2l)!/2^l canonical-natural specs at level ``l``, innermost couple first."""
    _check_level(l)
    return [FriersonSpec(1, tuple(Couple(a, b) for a, b in pairs)) for pairs in _assignments(powers(l))]


def enumerate_clans(l: int) -> list[ClanKey]:
    _check_level(l)
    return [ClanKey.of(m) for m in _matchings(powers(l))]


def clan_members(key: ClanKey, k: int = 1) -> list[FriersonSpec]:
    """The l! level orderings of a clan's couples."""
    return [FriersonSpec.of(k, *perm) for perm in permutations(key.couples)]


def double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2)) if m > 0 else 1


class CountRow(NamedTuple):
    l: int
    n: int
    first_couples: int
    num_squares: int
    num_clans: int
    variant_exponent: int
    variant_count: int


def counting_table(l_max: int) -> list[CountRow]:
    if l_max < 1:
        raise InvalidLevelError(f"l_max must be positive, got {l_max}")
    rows = []
    for l in range(1, l_max + 1):
        exponent = (9**l - 9) // 8
        rows.append(CountRow(
            l=l,
            n=3**l,
            first_couples=l * (2 * l - 1),
            num_squares=math.factorial(2 * l) // 2**l,
            num_clans=double_factorial(2 * l - 1),
            variant_exponent=exponent,
            variant_count=8**exponent,
        ))
    return rows


class ClanRow(NamedTuple):
    key: ClanKey
    H: float
    C: float
    R: int


def clan_table(l: int) -> list[ClanRow]:
    """Every clan at level ``l`` with its closed-form measures, ascending in H."""
    _check_level(l)
    rows = []
    for key in enumerate_clans(l):
        prof = closed_form_svs(key.spec())
        m = entropy_compression(prof.sigmas, 3**l)
        rows.append(ClanRow(key, m.H, m.C, prof.R))
    rows.sort(key=lambda r: (r.H, r.key))
    return rows


def lowest_entropy_key(l: int) -> ClanKey:
    return ClanKey.of((3 ** (2 * i), 3 ** (2 * i + 1)) for i in range(l))


class SeriesRow(NamedTuple):
    l: int
    n: int
    sigma1: int
    tail_over_sqrt3: tuple[int, ...]
    sigma_total: float
    H: float
    C: float
    rank: int


def lowest_entropy_series(l_max: int) -> list[SeriesRow]:
    """Closed-form measures of the consecutive-powers clan, levels 1..l_max."""
    _check_level(l_max, MAX_SERIES_LEVEL)
    rows = []
    for l in range(1, l_max + 1):
        key = lowest_entropy_key(l)
        spec = FriersonSpec.of(1, *key.couples)
        prof = closed_form_svs(spec)
        n = 3**l
        m = entropy_compression(prof.sigmas, n)
        # sigma^2 = 3^(2l-1) (a +- b)^2, so sigma / sqrt(3) = 3^(l-1) |a +- b|
        tail = sorted(
            (3 ** (l - 1) * v for a, b in key.couples for v in (a + b, abs(a - b))),
            reverse=True,
        )
        rows.append(SeriesRow(
            l=l,
            n=n,
            sigma1=n * (n * n + 1) // 2,
            tail_over_sqrt3=tuple(tail),
            sigma_total=prof.sigma_total,
            H=m.H,
            C=m.C,
            rank=prof.rank,
        ))
    return rows


class MppdRow(NamedTuple):
    l: int
    n: int
    sigma1: int
    tail_log2_over_sqrt5: tuple[int, ...]
    H: float
    C: float
    rank: int


def mppd_series(l_max: int) -> list[MppdRow]:
    rows = []
    for l in range(1, l_max + 1):
        prof = closed_form_svs_mppd(l)
        n = 4**l
        m = entropy_compression(prof.sigmas, n)
        rows.append(MppdRow(
            l=l,
            n=n,
            sigma1=n * (n * n + 1) // 2,
            tail_log2_over_sqrt5=tuple(6 * l - 3 - 2 * i for i in range(2 * l)),
            H=m.H,
            C=m.C,
            rank=prof.rank,
        ))
    return rows
