"""Square documents (JSON), CSV rows and pretty block rendering."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from .construction import Couple, FriersonSpec
from .errors import InvalidSpecError, ShapeError
from .matrix import IntSquareMatrix


@dataclass(frozen=True)
class SquareDocument:
    order: int
    elements: tuple[int, ...]
    provenance: dict[str, Any] | None = field(default=None, compare=True)

    def __post_init__(self):
        if len(self.elements) != self.order * self.order:
            raise ShapeError(f"{len(self.elements)} elements for order {self.order}")

    @classmethod
    def from_matrix(cls, mat: IntSquareMatrix, provenance: dict[str, Any] | None = None) -> "SquareDocument":
        return cls(mat.n, mat.entries, provenance)

    def matrix(self) -> IntSquareMatrix:
        return IntSquareMatrix.from_entries(self.order, self.elements)

    def to_json(self) -> str:
        doc: dict[str, Any] = {"order": self.order, "elements": list(self.elements)}
        if self.provenance is not None:
            doc["provenance"] = self.provenance
        return json.dumps(doc) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SquareDocument":
        doc = json.loads(text)
        try:
            order = int(doc["order"])
            elements = tuple(int(x) for x in doc["elements"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ShapeError(f"not a square document: {exc}") from exc
        return cls(order, elements, doc.get("provenance"))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def read(cls, path: str | Path) -> "SquareDocument":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def spec_provenance(spec: FriersonSpec) -> dict[str, Any]:
    return {"spec": {"k": spec.k, "couples": [[c.a, c.b] for c in spec.couples]}}


def spec_from_provenance(prov: dict[str, Any] | None) -> FriersonSpec | None:
    if not prov or "spec" not in prov:
        return None
    s = prov["spec"]
    return FriersonSpec(int(s["k"]), tuple(Couple(int(a), int(b)) for a, b in s["couples"]))


def parse_couples(text: str) -> tuple[Couple, ...]:
    """Parse ``"1,3;9,27"`` into couples, innermost first."""
    couples = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise InvalidSpecError(f"couple {chunk!r} must have exactly two members")
        try:
            couples.append(Couple(int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidSpecError(f"couple {chunk!r} has a non-integer member") from None
    if not couples:
        raise InvalidSpecError(f"no couples in {text!r}")
    return tuple(couples)


def fmt6(x: float) -> str:
    """Six significant digits, trailing zeros trimmed."""
    return f"{x:.6g}"


def fmt_value(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, float):
        return fmt6(x)
    return str(x)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_value(v) for v in row])
    return buf.getvalue()


def matrix_csv(mat: IntSquareMatrix) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(mat.tolist())
    return buf.getvalue()


def _block_base(n: int) -> int | None:
    for base in (3, 4):
        m = n
        while m > 1 and m % base == 0:
            m //= base
        if m == 1 and n > base:
            return base
    return None


def render_pretty(mat: IntSquareMatrix, block: int | None = None) -> str:
    """Grid text; orders 3^l / 4^l get ruled blocks, heavier at each coarser scale."""
    n = mat.n
    block = _block_base(n) if block is None else block
    width = max(len(str(x)) for x in mat.entries)
    scales = []
    if block:
        s = block
        while s < n:
            scales.append(s)
            s *= block

    def sep_level(k: int) -> int:
        # how many block scales end just before index k
        return sum(1 for s in scales if k % s == 0) if k else 0

    lines = []
    rule_chars = {1: "-", 2: "=", 3: "#"}
    for i, row in enumerate(mat.tolist()):
        level = sep_level(i)
        parts = []
        for j, x in enumerate(row):
            lv = sep_level(j)
            if lv:
                parts.append("|" * lv)
            parts.append(str(x).rjust(width))
        text = " ".join(parts)
        if level:
            lines.append(rule_chars.get(level, "#") * len(text))
        lines.append(text)
    return "\n".join(lines) + "\n"
