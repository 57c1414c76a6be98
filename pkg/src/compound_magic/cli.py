"""``cms`` command line: construct, analyze, enumerate, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import verify as verify_mod
from .construction import (
    CATALOG_NAMES,
    FriersonSpec,
    catalog,
    catalog_spec,
    compound,
    construct_frierson,
)
from .enumeration import (
    MAX_ENUM_LEVEL,
    MAX_SERIES_LEVEL,
    clan_table,
    counting_table,
    lowest_entropy_series,
    mppd_series,
)
from .errors import CMSError
from .io import (
    SquareDocument,
    csv_text,
    fmt6,
    matrix_csv,
    parse_couples,
    render_pretty,
    spec_from_provenance,
    spec_provenance,
)
from .matrix import IntSquareMatrix
from .measures import entropy_compression
from .properties import analyze_properties
from .spectra import closed_form_svs, singular_values_numeric

EXACT_VARIANT_LEVEL = 4


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")


def _spec(couples: str, k: int, level: int | None) -> FriersonSpec:
    try:
        spec = FriersonSpec(k, parse_couples(couples))
    except CMSError as exc:
        raise click.BadParameter(str(exc), param_hint="--couples") from None
    if level is not None and spec.level != level:
        raise click.BadParameter(
            f"{spec.level} couple(s) given for level {level}", param_hint="--couples"
        )
    return spec


def _catalog(name: str) -> IntSquareMatrix:
    try:
        return catalog(name)
    except CMSError as exc:
        raise click.BadParameter(str(exc), param_hint="--catalog") from None


def _parse_compound(tokens: tuple[str, str, str]) -> tuple[IntSquareMatrix, IntSquareMatrix, int, dict]:
    fields = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("pattern", "base", "step"):
            raise click.BadParameter(f"expected pattern=NAME base=NAME step=INT, got {tok!r}", param_hint="--compound")
        fields[key] = value
    if set(fields) != {"pattern", "base", "step"}:
        raise click.BadParameter("pattern, base and step are all required", param_hint="--compound")
    try:
        step = int(fields["step"])
    except ValueError:
        raise click.BadParameter(f"step must be an integer, got {fields['step']!r}", param_hint="--compound") from None
    return _catalog(fields["pattern"]), _catalog(fields["base"]), step, {"compound": fields}


@click.group()
def cli():
    """Frierson compound magic squares: construction, spectra and entropy."""


@cli.command()
@click.option("--level", type=int, help="Nesting level l (order 3^l).")
@click.option("--couples", help='Couples, innermost first, e.g. "3,1;27,9".')
@click.option("--k", "k", type=int, default=1, show_default=True, help="Additive constant.")
@click.option("--catalog", "catalog_name", type=click.Choice(CATALOG_NAMES, case_sensitive=False))
@click.option("--compound", "compound_args", nargs=3, help="pattern=NAME base=NAME step=INT")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json", show_default=True)
@click.option("--require-natural", is_flag=True, help="Fail unless the entries are exactly 1..n^2.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def construct(level, couples, k, catalog_name, compound_args, fmt, require_natural, out):
    """Build a square from couples, the catalog, or a compound recipe."""
    sources = [couples is not None, catalog_name is not None, bool(compound_args)]
    if sum(sources) != 1:
        raise click.UsageError("give exactly one of --couples, --catalog or --compound")

    if couples is not None:
        spec = _spec(couples, k, level)
        members = spec.members()
        if require_natural and len(set(members)) != len(members):
            raise click.BadParameter("couple members repeat, so the square cannot be natural", param_hint="--couples")
        mat = construct_frierson(spec)
        provenance = spec_provenance(spec)
    elif catalog_name is not None:
        mat = _catalog(catalog_name)
        provenance = {"catalog": catalog_name.lower()}
    else:
        pattern, base, step, provenance = _parse_compound(compound_args)
        try:
            mat = compound(pattern, base, step)
        except CMSError as exc:
            raise click.BadParameter(str(exc), param_hint="--compound") from None

    if require_natural and not analyze_properties(mat).is_natural:
        raise click.UsageError("constructed square is not natural (entries are not 1..n^2)")

    if fmt == "json":
        text = SquareDocument.from_matrix(mat, provenance).to_json()
    elif fmt == "csv":
        text = matrix_csv(mat)
    else:
        text = render_pretty(mat)
    _emit(text, out)


ANALYZE_HEADER = ("name", "n", "S", "rank", "H", "C", "R", "L", "is_magic", "is_associative", "is_pandiagonal")


def analyze_square(mat: IntSquareMatrix, name: str, spec: FriersonSpec | None = None) -> dict:
    props = analyze_properties(mat)
    prof = singular_values_numeric(mat)
    meas = entropy_compression(prof.sigmas, mat.n)
    report = {
        "name": name,
        "n": mat.n,
        "properties": {
            "S": props.magic_constant,
            "is_magic": props.is_magic,
            "is_natural": props.is_natural,
            "is_associative": props.is_associative,
            "is_pandiagonal": props.is_pandiagonal,
            "is_ultramagic": props.is_ultramagic,
            "row_sums": list(props.row_sums),
            "col_sums": list(props.col_sums),
            "diagonal_sums": list(props.diagonal_sums),
        },
        "spectrum": {
            "sigmas": list(prof.sigmas),
            "sigma_sq_exact": list(prof.sigma_sq_exact) if prof.exact else None,
            "rank": prof.rank,
            "R": prof.R,
            "R_exact": prof.exact,
            "L": prof.L,
        },
        "measures": {"H": meas.H, "C": meas.C},
    }
    if spec is not None:
        cf = closed_form_svs(spec)
        report["closed_form"] = {
            "sigma_sq": list(cf.sigma_sq_exact),
            "max_abs_deviation": max(abs(a - b) for a, b in zip(prof.sigmas, cf.sigmas)),
        }
    return report


def _analyze_row(rep: dict) -> list:
    p, s, m = rep["properties"], rep["spectrum"], rep["measures"]
    R = s["R"] if s["R_exact"] else float(s["R"])
    return [rep["name"], rep["n"], p["S"], s["rank"], m["H"], m["C"], R, s["L"],
            p["is_magic"], p["is_associative"], p["is_pandiagonal"]]


@cli.command()
@click.option("--catalog", "catalog_name", type=click.Choice(CATALOG_NAMES, case_sensitive=False))
@click.option("--spec", "couples", help='Frierson couples, innermost first, e.g. "3,1;27,9".')
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--in", "in_path", type=click.Path(dir_okay=False, path_type=Path), help="Square document (JSON).")
@click.option("--name", help="Label for the report row.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def analyze(catalog_name, couples, k, in_path, name, fmt, out):
    """Magic properties, singular values, entropy and compression of a square."""
    if sum(x is not None for x in (catalog_name, couples, in_path)) != 1:
        raise click.UsageError("give exactly one of --catalog, --spec or --in")
    spec = None
    if catalog_name is not None:
        mat = _catalog(catalog_name)
        spec = catalog_spec(catalog_name)
        label = catalog_name.lower()
    elif couples is not None:
        spec = _spec(couples, k, None)
        mat = construct_frierson(spec)
        label = couples
    else:
        try:
            doc = SquareDocument.read(in_path)
            spec = spec_from_provenance(doc.provenance)
            mat = doc.matrix()
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise click.BadParameter(f"cannot read {in_path}: {exc}", param_hint="--in") from None
        label = in_path.stem
    rep = analyze_square(mat, name or label, spec)

    if fmt == "json":
        text = json.dumps(rep, indent=2) + "\n"
    else:
        text = csv_text(ANALYZE_HEADER, [_analyze_row(rep)])
    _emit(text, out)


def _variant_text(row) -> str:
    if row.l <= EXACT_VARIANT_LEVEL:
        return str(row.variant_count)
    return f"8^{row.variant_exponent}"


@cli.command("enumerate")
@click.option("--level", type=int, help="Level for the clan table.")
@click.option("--sort", "sort_by", type=click.Choice(["entropy", "key"]), default="entropy", show_default=True)
@click.option("--counts", is_flag=True, help="Counting table of squares, clans and variants.")
@click.option("--series", is_flag=True, help="Lowest-entropy series.")
@click.option("--mppd", is_flag=True, help="Compounded MPPD4-alpha series.")
@click.option("--max-level", type=int, default=5, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
def enumerate_cmd(level, sort_by, counts, series, mppd, max_level, fmt, out):
    """Clan tables, counting rows and closed-form series."""
    modes = [level is not None, counts, series, mppd]
    if sum(bool(m) for m in modes) != 1:
        raise click.UsageError("give exactly one of --level, --counts, --series or --mppd")

    if level is not None:
        if not 1 <= level <= MAX_ENUM_LEVEL:
            raise click.BadParameter(f"must be in 1..{MAX_ENUM_LEVEL}", param_hint="--level")
        rows = clan_table(level)
        if sort_by == "key":
            rows = sorted(rows, key=lambda r: r.key)
        header = ("clan", "H", "C", "R")
        data = [[str(r.key), r.H, r.C, r.R] for r in rows]
    elif counts:
        if max_level < 1:
            raise click.BadParameter("must be positive", param_hint="--max-level")
        header = ("n", "l", "first_couples", "num_squares", "num_clans", "variant_exponent", "variant_count")
        data = [[r.n, r.l, r.first_couples, r.num_squares, r.num_clans, r.variant_exponent, _variant_text(r)]
                for r in counting_table(max_level)]
    elif series:
        if not 1 <= max_level <= MAX_SERIES_LEVEL:
            raise click.BadParameter(f"must be in 1..{MAX_SERIES_LEVEL}", param_hint="--max-level")
        header = ("l", "n", "sigma1", "sigma_total", "H", "C", "rank", "tail_over_sqrt3")
        data = [[r.l, r.n, r.sigma1, r.sigma_total, r.H, r.C, r.rank, " ".join(map(str, r.tail_over_sqrt3))]
                for r in lowest_entropy_series(max_level)]
    else:
        if max_level < 1:
            raise click.BadParameter("must be positive", param_hint="--max-level")
        header = ("l", "n", "sigma1", "H", "C", "rank", "tail_log2_over_sqrt5")
        data = [[r.l, r.n, r.sigma1, r.H, r.C, r.rank, " ".join(map(str, r.tail_log2_over_sqrt5))]
                for r in mppd_series(max_level)]

    if fmt == "csv":
        text = csv_text(header, data)
    else:
        recs = [dict(zip(header, (fmt6(v) if isinstance(v, float) else v for v in row))) for row in data]
        text = json.dumps(recs, indent=2) + "\n"
    _emit(text, out)


@cli.command("verify")
@click.option("--only", multiple=True, type=click.Choice(verify_mod.TABLES), help="Restrict to these tables.")
@click.option("--goldens", type=click.Path(file_okay=False, exists=True, path_type=Path),
              help="Directory of golden CSVs (defaults to the packaged ones).")
@click.option("-v", "--verbose", is_flag=True, help="Print every checked cell.")
def verify_cmd(only, goldens, verbose):
    """Recompute the reference tables and compare against the golden CSVs."""
    tables = only or verify_mod.TABLES
    results = verify_mod.run(tables, goldens)
    failed = []
    for table, res in results.items():
        bad = [r for r in res if not r.ok]
        click.echo(f"{table}: {'PASS' if not bad else 'FAIL'} ({len(res) - len(bad)}/{len(res)} cells)")
        for r in res:
            if not r.ok or verbose or r.golden.printed:
                click.echo(f"  {r.line()}")
        if bad:
            failed.append(table)
    names = ",".join(t.removeprefix("table") for t in tables)
    if failed:
        click.echo(f"tables {names}: FAIL ({', '.join(failed)})")
        sys.exit(1)
    click.echo(f"tables {names}: PASS")


def main() -> None:
    cli(prog_name="cms")


if __name__ == "__main__":
    main()
