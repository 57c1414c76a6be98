"""Builders for Frierson compound squares and the named catalog squares."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidSpecError, InvalidStepError, NotFoundError
from .matrix import (
    BlockGrid,
    IntSquareMatrix,
    addition_table,
    block_compose,
    kronecker,
    ones_matrix,
)


@dataclass(frozen=True)
class Couple:
    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def canonical(self) -> tuple[int, int]:
        return (min(self.a, self.b), max(self.a, self.b))


@dataclass(frozen=True)
class FriersonSpec:
    """Constant ``k`` plus couples ordered innermost (finest scale) first."""

    k: int
    couples: tuple[Couple, ...]

    def __post_init__(self):
        if not self.couples:
            raise InvalidSpecError("a Frierson spec needs at least one couple")
        object.__setattr__(
            self, "couples", tuple(c if isinstance(c, Couple) else Couple(*c) for c in self.couples)
        )

    @classmethod
    def of(cls, k: int, *couples: tuple[int, int]) -> "FriersonSpec":
        return cls(k, tuple(Couple(a, b) for a, b in couples))

    @property
    def level(self) -> int:
        return len(self.couples)

    @property
    def order(self) -> int:
        return 3**self.level

    def members(self) -> list[int]:
        return [x for c in self.couples for x in c]

    def is_canonical_natural(self) -> bool:
        return self.k == 1 and sorted(self.members()) == [3**i for i in range(2 * self.level)]


@dataclass(frozen=True)
class LucasParams:
    a: int
    b: int
    c: int


def frierson_block(couple: Couple | tuple[int, int]) -> IntSquareMatrix:
    a, b = couple
    return IntSquareMatrix([
        [2 * a + b, 0, a + 2 * b],
        [2 * b, a + b, 2 * a],
        [a, 2 * a + 2 * b, b],
    ])


def construct_frierson(spec: FriersonSpec) -> IntSquareMatrix:
    """Compound square ``k*E + sum_j E_{3^(l-j)} x M(couple_j) x E_{3^(j-1)}``.

    Couple j contributes its order-3 block at block scale 3^(j-1), so the
    first couple fills every 3x3 cell and the last one sets the offsets of
    the largest subsquares.
    """
    l = spec.level
    n = spec.order
    out = ones_matrix(n) * spec.k
    for j, couple in enumerate(spec.couples, start=1):
        term = kronecker(ones_matrix(3 ** (l - j)), frierson_block(couple))
        out = out + kronecker(term, ones_matrix(3 ** (j - 1)))
    return out


def offset_grid(base: IntSquareMatrix, offsets: Sequence[Sequence[int]]) -> BlockGrid:
    """Compact form: block (i, j) is ``base + offsets[i][j] * E``."""
    e = ones_matrix(base.n)
    return BlockGrid(tuple(tuple(base + e * int(off) for off in row) for row in offsets))


def compound(pattern: IntSquareMatrix, base: IntSquareMatrix, step: int) -> IntSquareMatrix:
    """Tile ``base`` in the pattern of ``pattern``, offsetting by ``(p - 1) * step``."""
    if step == 0:
        raise InvalidStepError("compounding step must be non-zero")
    offsets = (pattern - 1) * step
    return block_compose(offset_grid(base, offsets.tolist()))


def lucas_square(p: LucasParams) -> IntSquareMatrix:
    a, b, c = p.a, p.b, p.c
    return IntSquareMatrix([
        [c + a, c - a - b, c + b],
        [c - a + b, c, c + a - b],
        [c - b, c + a + b, c - a],
    ])


MPPD4_ALPHA = IntSquareMatrix([
    [1, 15, 4, 14],
    [8, 10, 5, 11],
    [13, 3, 16, 2],
    [12, 6, 9, 7],
])


def mppd_compound(level: int) -> IntSquareMatrix:
    """MPPD4-alpha compounded with itself ``level - 1`` times (order 4**level)."""
    if level < 1:
        raise InvalidSpecError(f"level must be positive, got {level}")
    sq = MPPD4_ALPHA
    for _ in range(level - 1):
        sq = compound(MPPD4_ALPHA, sq, sq.n**2)
    return sq


M3 = IntSquareMatrix([[8, 1, 6], [3, 5, 7], [4, 9, 2]])
LUOSHU = IntSquareMatrix([[4, 9, 2], [3, 5, 7], [8, 1, 6]])
D3 = IntSquareMatrix([[64, 1, 46], [19, 37, 55], [28, 73, 10]])
B3 = IntSquareMatrix([[56, 1, 30], [3, 29, 55], [28, 57, 2]])
C3 = IntSquareMatrix([[20, 1, 12], [3, 11, 19], [10, 21, 2]])

# compact forms: (base, block offsets)
_T9D_OFFSETS = [[7, 0, 5], [2, 4, 6], [3, 8, 1]]
_T9B_OFFSETS = [[21, 0, 15], [6, 12, 18], [9, 24, 3]]
_T9C_OFFSETS = [[57, 0, 33], [6, 30, 54], [27, 60, 3]]

_BROWNE_B3 = IntSquareMatrix([[28, 57, 2], [3, 29, 55], [56, 1, 30]])
_BROWNE_B9_OFFSETS = [[81, 168, 3], [6, 84, 162], [165, 0, 87]]
_BROWNE_B27_OFFSETS = [[243, 504, 9], [18, 252, 486], [495, 0, 261]]

# parameters of the sextet, innermost couple first
SEXTET_SPECS = {
    "t9a": FriersonSpec.of(1, (3, 1), (27, 9)),
    "t9d": FriersonSpec.of(1, (27, 9), (3, 1)),
    "t9b": FriersonSpec.of(1, (27, 1), (9, 3)),
    "t9e": FriersonSpec.of(1, (9, 3), (27, 1)),
    "t9c": FriersonSpec.of(1, (9, 1), (27, 3)),
    "t9f": FriersonSpec.of(1, (27, 3), (9, 1)),
}

F27A_SPEC = FriersonSpec.of(1, (3, 1), (27, 9), (243, 81))


def browne_b27() -> IntSquareMatrix:
    b9 = block_compose(offset_grid(_BROWNE_B3, _BROWNE_B9_OFFSETS))
    return block_compose(offset_grid(b9, _BROWNE_B27_OFFSETS))


def _t9a() -> IntSquareMatrix:
    return compound(M3, M3, 9)


_CATALOG = {
    "luoshu": lambda: LUOSHU,
    "m3": lambda: M3,
    "at3": lambda: addition_table(3),
    "at9": lambda: addition_table(9),
    "t9a": _t9a,
    "t9b": lambda: block_compose(offset_grid(B3, _T9B_OFFSETS)),
    "t9c": lambda: block_compose(offset_grid(C3, _T9C_OFFSETS)),
    "t9d": lambda: block_compose(offset_grid(D3, _T9D_OFFSETS)),
    "t9e": lambda: construct_frierson(SEXTET_SPECS["t9e"]),
    "t9f": lambda: construct_frierson(SEXTET_SPECS["t9f"]),
    "d3": lambda: D3,
    "b3": lambda: B3,
    "c3": lambda: C3,
    "f27a": lambda: compound(M3, _t9a(), 81),
    "browne_b27": browne_b27,
    "mppd4alpha": lambda: MPPD4_ALPHA,
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog(name: str) -> IntSquareMatrix:
    try:
        builder = _CATALOG[name.lower()]
    except KeyError:
        raise NotFoundError(f"unknown catalog square {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return builder()


def catalog_spec(name: str) -> FriersonSpec | None:
    """Frierson parameters that rebuild a catalog square exactly, if any."""
    name = name.lower()
    if name in SEXTET_SPECS:
        return SEXTET_SPECS[name]
    return {
        "m3": FriersonSpec.of(1, (3, 1)),
        "d3": FriersonSpec.of(1, (27, 9)),
        "b3": FriersonSpec.of(1, (27, 1)),
        "c3": FriersonSpec.of(1, (9, 1)),
        "f27a": F27A_SPEC,
    }.get(name)

