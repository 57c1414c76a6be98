"""Golden-table regression checks behind ``cms verify``."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .construction import M3, FriersonSpec, catalog, construct_frierson, mppd_compound
from .enumeration import (
    clan_table,
    counting_table,
    enumerate_assignments,
    enumerate_clans,
    lowest_entropy_key,
    lowest_entropy_series,
    mppd_series,
)
from .matrix import addition_table, ones_matrix
from .measures import entropy_compression, zero_based_shift
from .spectra import closed_form_svs, closed_form_svs_mppd, singular_values_numeric

TABLES = ("table2", "table3", "table4", "table5", "table6", "table7", "table8")
TABLE5_LABELS = "ABCDEFGHIJKLMNO"


@dataclass(frozen=True)
class GoldenRow:
    row: str
    column: str
    expected: str
    tol: str
    printed: str
    note: str


@dataclass(frozen=True)
class CheckResult:
    table: str
    golden: GoldenRow
    actual: object
    ok: bool

    def line(self) -> str:
        g = self.golden
        status = "ok" if self.ok else "FAIL"
        text = f"{self.table} {g.row}/{g.column}: {status} expected={g.expected} got={_show(self.actual)}"
        if g.printed:
            text += f" (published {g.printed})"
        return text


def _show(x: object) -> str:
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def load_goldens(table: str, directory: str | Path | None = None) -> list[GoldenRow]:
    if directory is None:
        text = resources.files("compound_magic").joinpath("goldens").joinpath(f"{table}.csv").read_text("utf-8")
    else:
        text = Path(directory, f"{table}.csv").read_text("utf-8")
    reader = csv.DictReader(text.splitlines())
    return [GoldenRow(r["row"], r["column"], r["expected"], r["tol"], r.get("printed") or "", r.get("note") or "")
            for r in reader]


def compare(expected: str, actual: object, tol: str) -> bool:
    if tol == "exact":
        if isinstance(actual, bool):
            return expected.lower() == ("true" if actual else "false")
        if isinstance(actual, int):
            try:
                return int(expected) == actual
            except ValueError:
                return False
        return str(actual) == expected
    kind, _, amount = tol.partition(":")
    e, a, t = float(expected), float(actual), float(amount)
    if kind == "abs":
        return abs(a - e) <= t
    if kind == "rel":
        return abs(a - e) <= t * abs(e)
    raise ValueError(f"unknown tolerance {tol!r}")


def _measure_row(prefix: str, prof, n: int) -> dict[tuple[str, str], object]:
    m = entropy_compression(prof.sigmas, n)
    out: dict[tuple[str, str], object] = {
        (prefix, "H"): m.H,
        (prefix, "C"): m.C,
        (prefix, "rank"): prof.rank,
        (prefix, "R"): prof.R,
        (prefix, "L"): prof.L,
    }
    for i, s in enumerate(prof.sigmas, start=1):
        out[(prefix, f"sigma{i}")] = s
    return out


def compute_table2() -> dict:
    out = {}
    out.update(_measure_row("5E3", singular_values_numeric(ones_matrix(3) * 5), 3))
    out.update(_measure_row("M3", singular_values_numeric(M3), 3))
    out.update(_measure_row("AT3", singular_values_numeric(addition_table(3)), 3))
    zero = singular_values_numeric(zero_based_shift(M3))
    out.update(_measure_row("M3zero", zero, 3))
    return out


def compute_table3() -> dict:
    out = {}
    for name in ("t9a", "t9d", "t9b", "t9e", "t9c", "t9f"):
        prof = singular_values_numeric(catalog(name))
        row = _measure_row(name.upper(), prof, 9)
        row[(name.upper(), "sigma1")] = round(prof.sigmas[0])
        out.update(row)
    clans = {tuple(closed_form_svs(s).sigma_sq_exact) for s in enumerate_assignments(2)}
    out[("sextet", "clans")] = len(clans)
    return out


def compute_table4() -> dict:
    out = {}
    for l in (1, 2, 3):
        key = lowest_entropy_key(l)
        sq = construct_frierson(FriersonSpec.of(1, *key.couples))
        prof = singular_values_numeric(sq)
        biggest = max(a + b for a, b in key.couples)
        out[(f"l{l}", "rank")] = prof.rank
        out[(f"l{l}", "S")] = sum(sq.array[0].tolist())
        out[(f"l{l}", "pair_factor")] = round(prof.sigmas[1] ** 2 / biggest**2)
    return out


def compute_table5() -> dict:
    out: dict = {}
    for label, row in zip(TABLE5_LABELS, clan_table(3)):
        out[(label, "clan")] = str(row.key)
        out[(label, "H")] = row.H
        out[(label, "C")] = row.C
        out[(label, "R")] = row.R
        out[(label, "lnR")] = math.log(row.R)
    b27 = singular_values_numeric(catalog("browne_b27"))
    out[("browne_b27", "H")] = entropy_compression(b27.sigmas, 27).H
    return out


def compute_table6() -> dict:
    out: dict = {}
    for r in lowest_entropy_series(6):
        p = f"l{r.l}"
        out[(p, "sigma1")] = r.sigma1
        out[(p, "tail")] = " ".join(map(str, r.tail_over_sqrt3))
        out[(p, "sigma_total")] = r.sigma_total
        out[(p, "C")] = r.C
        out[(p, "H")] = r.H
        out[(p, "rank")] = r.rank
    return out


def compute_table7() -> dict:
    out: dict = {}
    for r in counting_table(5):
        p = f"l{r.l}"
        out[(p, "first_couples")] = r.first_couples
        out[(p, "num_squares")] = len(enumerate_assignments(r.l))
        out[(p, "num_clans")] = len(enumerate_clans(r.l))
        out[(p, "variant_exponent")] = r.variant_exponent
        if r.l == 3:
            out[(p, "variant_count_digits")] = len(str(r.variant_count))
    return out


def compute_table8() -> dict:
    out: dict = {}
    for r in mppd_series(4):
        p = f"l{r.l}"
        out[(p, "sigma1")] = r.sigma1
        out[(p, "tail_log2")] = " ".join(map(str, r.tail_log2_over_sqrt5))
        out[(p, "C")] = r.C
        out[(p, "H")] = r.H
        out[(p, "rank")] = r.rank
        if r.l <= 3:
            num = singular_values_numeric(mppd_compound(r.l))
            cf = closed_form_svs_mppd(r.l)
            out[(p, "numeric_agrees")] = num.rank == cf.rank and all(
                abs(a - b) <= 1e-9 * cf.sigmas[0] for a, b in zip(num.sigmas, cf.sigmas)
            )
    return out


COMPUTE: dict[str, Callable[[], dict]] = {
    "table2": compute_table2,
    "table3": compute_table3,
    "table4": compute_table4,
    "table5": compute_table5,
    "table6": compute_table6,
    "table7": compute_table7,
    "table8": compute_table8,
}


def check_table(table: str, directory: str | Path | None = None) -> list[CheckResult]:
    actual = COMPUTE[table]()
    results = []
    for g in load_goldens(table, directory):
        value = actual.get((g.row, g.column))
        ok = value is not None and compare(g.expected, value, g.tol)
        results.append(CheckResult(table, g, value, ok))
    return results


def run(tables: Iterable[str] = TABLES, directory: str | Path | None = None) -> dict[str, list[CheckResult]]:
    return {t: check_table(t, directory) for t in tables}

