"""Magic, natural, associative and pandiagonal predicates, plus the 8 symmetries."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .matrix import IntSquareMatrix


@dataclass(frozen=True)
class PropertyReport:
    n: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    diagonal_sums: tuple[int, int]
    # index o: sum_i M[i, (i+o) % n]; offset 0 is the main diagonal
    broken_diagonal_sums: tuple[int, ...]
    # index o: sum_i M[i, (o-i) % n]; offset n-1 is the anti-diagonal
    broken_antidiagonal_sums: tuple[int, ...]
    is_magic: bool
    is_natural: bool
    is_associative: bool
    is_pandiagonal: bool
    magic_constant: int | None

    @property
    def is_ultramagic(self) -> bool:
        return self.is_associative and self.is_pandiagonal


def _sums(values) -> tuple[int, ...]:
    return tuple(int(x) for x in values)


def analyze_properties(mat: IntSquareMatrix) -> PropertyReport:
    a = mat.array
    n = mat.n
    rows = _sums(a.sum(axis=1))
    cols = _sums(a.sum(axis=0))
    idx = np.arange(n)
    diag = int(a[idx, idx].sum())
    anti = int(a[idx, n - 1 - idx].sum())
    broken = _sums(a[idx, (idx + o) % n].sum() for o in range(n))
    broken_anti = _sums(a[idx, (o - idx) % n].sum() for o in range(n))

    lines = set(rows) | set(cols) | {diag, anti}
    is_magic = len(lines) == 1
    antipodal = a + a[::-1, ::-1]
    is_associative = bool((antipodal == antipodal[0, 0]).all())
    is_pandiagonal = len(set(broken) | set(broken_anti)) == 1
    is_natural = sorted(mat.entries) == list(range(1, n * n + 1))

    return PropertyReport(
        n=n,
        row_sums=rows,
        col_sums=cols,
        diagonal_sums=(diag, anti),
        broken_diagonal_sums=broken,
        broken_antidiagonal_sums=broken_anti,
        is_magic=is_magic,
        is_natural=is_natural,
        is_associative=is_associative,
        is_pandiagonal=is_pandiagonal,
        magic_constant=rows[0] if is_magic else None,
    )


def symmetry_variants(mat: IntSquareMatrix) -> list[IntSquareMatrix]:
    """The dihedral orbit: four rotations of ``mat``, then four of its transpose."""
    a = mat.array
    out = [IntSquareMatrix(np.rot90(a, k)) for k in range(4)]
    out += [IntSquareMatrix(np.rot90(a.T, k)) for k in range(4)]
    return out


def equivalent_up_to_symmetry(a: IntSquareMatrix, b: IntSquareMatrix) -> bool:
    if a.n != b.n:
        raise ShapeError(f"orders differ: {a.n} vs {b.n}")
    return any(v == b for v in symmetry_variants(a))
