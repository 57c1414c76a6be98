"""Exact integer square matrices and the structural operations on them.

Entries are held in a numpy array. Small values use ``int64``; anything that
could overflow 63 bits is promoted to ``object`` dtype so Python's arbitrary
precision integers take over. No floating point is ever involved here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidOrderError, ShapeError

_INT64_SAFE = 2**62


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(int(a.max())), abs(int(a.min())))


def _exact(a: np.ndarray, bound: int | None = None) -> np.ndarray:
    """Return ``a`` as int64 if every entry (or ``bound``) fits, else object."""
    if a.dtype == object:
        bound = _max_abs(a) if bound is None else bound
        if bound < _INT64_SAFE:
            return a.astype(np.int64)
        return a
    if not np.issubdtype(a.dtype, np.integer):
        raise TypeError(f"integer entries required, got dtype {a.dtype}")
    return a.astype(np.int64, copy=False)


def _widen(a: np.ndarray, bound: int) -> np.ndarray:
    """Promote to object dtype when a result could reach ``bound``."""
    if bound >= _INT64_SAFE and a.dtype != object:
        return a.astype(object)
    return a


class IntSquareMatrix:
    """Immutable n-by-n matrix of exact integers."""

    __slots__ = ("_a",)

    def __init__(self, rows: Iterable[Iterable[int]] | np.ndarray):
        if isinstance(rows, IntSquareMatrix):
            a = rows._a
        elif isinstance(rows, np.ndarray):
            a = rows
        else:
            a = np.array([[int(x) for x in r] for r in rows], dtype=object)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ShapeError(f"expected a non-empty square matrix, got shape {a.shape}")
        a = _exact(np.array(a, copy=True))
        a.setflags(write=False)
        self._a = a

    @classmethod
    def from_entries(cls, n: int, entries: Sequence[int]) -> "IntSquareMatrix":
        if n < 1:
            raise InvalidOrderError(f"order must be positive, got {n}")
        if len(entries) != n * n:
            raise ShapeError(f"{len(entries)} entries cannot fill an order-{n} matrix")
        a = np.array([int(x) for x in entries], dtype=object).reshape(n, n)
        return cls(a)

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only integer view (int64 or object dtype)."""
        return self._a

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a.flat)

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def to_float(self) -> np.ndarray:
        return self._a.astype(np.float64)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self._a[ij])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSquareMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __repr__(self) -> str:
        if self.n <= 9:
            return f"IntSquareMatrix({self.tolist()})"
        return f"IntSquareMatrix(n={self.n})"

    def max_abs(self) -> int:
        return _max_abs(self._a)

    def __add__(self, other: "IntSquareMatrix | int") -> "IntSquareMatrix":
        if isinstance(other, IntSquareMatrix):
            if other.n != self.n:
                raise ShapeError(f"cannot add orders {self.n} and {other.n}")
            bound = self.max_abs() + other.max_abs()
            return IntSquareMatrix(_widen(self._a, bound) + _widen(other._a, bound))
        other = int(other)
        bound = self.max_abs() + abs(other)
        return IntSquareMatrix(_widen(self._a, bound) + other)

    __radd__ = __add__

    def __neg__(self) -> "IntSquareMatrix":
        return IntSquareMatrix(-self._a)

    def __sub__(self, other: "IntSquareMatrix | int") -> "IntSquareMatrix":
        return self + (-other)

    def __mul__(self, scalar: int) -> "IntSquareMatrix":
        scalar = int(scalar)
        bound = self.max_abs() * abs(scalar)
        return IntSquareMatrix(_widen(self._a, bound) * scalar)

    __rmul__ = __mul__

    def transpose(self) -> "IntSquareMatrix":
        return IntSquareMatrix(self._a.T)

    @property
    def T(self) -> "IntSquareMatrix":
        return self.transpose()

    def gram(self) -> np.ndarray:
        """Exact ``M @ M.T``."""
        bound = self.n * self.max_abs() ** 2
        a = _widen(self._a, bound)
        return _exact(a @ a.T, bound)


def ones_matrix(n: int) -> IntSquareMatrix:
    if n < 1:
        raise InvalidOrderError(f"order must be positive, got {n}")
    return IntSquareMatrix(np.ones((n, n), dtype=np.int64))


def addition_table(n: int) -> IntSquareMatrix:
    """Entry (i, j) is ``i*n + j + 1`` (zero-based i, j)."""
    if n < 1:
        raise InvalidOrderError(f"order must be positive, got {n}")
    return IntSquareMatrix(np.arange(1, n * n + 1, dtype=np.int64).reshape(n, n))


def kronecker(a: IntSquareMatrix, b: IntSquareMatrix) -> IntSquareMatrix:
    bound = a.max_abs() * b.max_abs()
    return IntSquareMatrix(np.kron(_widen(a.array, bound), _widen(b.array, bound)))


@dataclass(frozen=True)
class BlockGrid:
    """An m-by-m arrangement of equally sized square blocks."""

    blocks: tuple[tuple[IntSquareMatrix, ...], ...]

    def __post_init__(self):
        m = len(self.blocks)
        if m == 0 or any(len(row) != m for row in self.blocks):
            raise ShapeError("block grid must be square and non-empty")
        orders = {blk.n for row in self.blocks for blk in row}
        if len(orders) != 1:
            raise ShapeError(f"blocks have mixed orders {sorted(orders)}")

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def block_order(self) -> int:
        return self.blocks[0][0].n

    def __getitem__(self, ij: tuple[int, int]) -> IntSquareMatrix:
        i, j = ij
        return self.blocks[i][j]


def block_compose(grid: BlockGrid) -> IntSquareMatrix:
    arrays = [[blk.array for blk in row] for row in grid.blocks]
    if any(a.dtype == object for row in arrays for a in row):
        arrays = [[a.astype(object) for a in row] for row in arrays]
    return IntSquareMatrix(np.block(arrays))


def block_decompose(mat: IntSquareMatrix, m: int) -> BlockGrid:
    """Split ``mat`` into an m-by-m grid of blocks."""
    if m < 1 or mat.n % m:
        raise ShapeError(f"grid order {m} does not divide matrix order {mat.n}")
    b = mat.n // m
    a = mat.array
    return BlockGrid(tuple(
        tuple(IntSquareMatrix(a[i * b:(i + 1) * b, j * b:(j + 1) * b]) for j in range(m))
        for i in range(m)
    ))
