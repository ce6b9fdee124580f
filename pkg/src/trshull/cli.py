"""Command-line front end: construct codes, analyze them, run eta sweeps,
and verify the reference examples.

Exit codes: 0 success, 2 usage or parameter violation, 3 input parse/IO
error, 4 resource guard (enumeration refused).  All commands are
deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from . import __version__
from .code import LinearCode, TooLargeToEnumerate, compute_report
from .gf import FieldError, make_field
from .search import (
    EXAMPLE_IDS,
    SearchSpec,
    sweep_eta,
    verify_example,
)
from .trs import FAMILIES, ParamViolation, TrsError, code_from_recipe

_EXIT_PARAMS = 2
_EXIT_PARSE = 3
_EXIT_GUARD = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


@click.group()
@click.version_option(__version__, prog_name="trshull")
def main():
    """Twisted Reed-Solomon codes with one-dimensional hull."""


@main.command()
@click.option("--family", required=True, type=click.Choice(FAMILIES))
@click.option("--field", "field_spec", required=True, help="e.g. GF(2^4)")
@click.option("--k", required=True, type=int)
@click.option("--t", type=int, default=None)
@click.option("--h", type=int, default=None)
@click.option("--eta", default=None, help="element, e.g. g^3 or 0 or poly:1,1")
@click.option("--subfield", type=int, default=None,
              help="evaluate on points of this subfield (lemma families)")
@click.option("--alpha", default=None,
              help="comma-separated evaluation points (trs/grs families)")
@click.option("--v", "multipliers", default=None,
              help="comma-separated column multipliers (grs family)")
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def construct(family, field_spec, k, t, h, eta, subfield, alpha, multipliers, out):
    """Build a code from a construction recipe and write it as JSON."""
    recipe: dict = {"family": family, "field": field_spec, "k": k}
    if family in ("lemma31", "lemma32", "trs"):
        if t is None or h is None or eta is None:
            raise click.UsageError(f"family {family} requires --t, --h and --eta")
        recipe.update(t=t, h=h, eta=eta)
        if subfield is not None:
            recipe["subfield"] = subfield
    if family in ("trs", "grs"):
        if alpha is None:
            raise click.UsageError(f"family {family} requires --alpha")
        recipe["alpha"] = alpha.split(",")
    if family == "grs" and multipliers is not None:
        recipe["v"] = multipliers.split(",")

    try:
        code, echo = code_from_recipe(recipe)
    except (TrsError, FieldError) as exc:
        _fail(_EXIT_PARAMS, str(exc))
    payload = code.to_dict()
    payload["recipe"] = echo
    Path(out).write_text(_dump_json(payload), encoding="utf-8")
    click.echo(f"wrote [{code.n},{code.k}] code over {code.field} to {out}")


@main.command()
@click.argument("path", type=click.Path(exists=False))
@click.option("--min-distance", "want_distance", is_flag=True,
              help="brute-force the minimum distance (guarded)")
@click.option("--json", "as_json", is_flag=True, default=False,
              help="JSON output (default)")
@click.option("--csv", "as_csv", is_flag=True, default=False,
              help="single-row CSV output")
def analyze(path, want_distance, as_json, as_csv):
    """Analyze a code file: hull, MDS, Schur square, non-GRS certificate."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        code = LinearCode.from_dict(payload)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        _fail(_EXIT_PARSE, f"cannot read code file {path}: {exc}")
    try:
        report = compute_report(code, with_min_distance=want_distance,
                                params=payload.get("recipe"))
    except TooLargeToEnumerate as exc:
        _fail(_EXIT_GUARD, str(exc))
    d = report.to_dict()
    if as_csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = ["field", "n", "k", "hull_dimension", "is_mds", "min_distance",
                "schur_dimension", "non_rs_certificate"]
        writer.writerow(keys)
        writer.writerow([d[key] for key in keys])
        click.echo(buf.getvalue(), nl=False)
    else:
        click.echo(_dump_json(d), nl=False)


@main.command()
@click.option("--family", required=True, type=click.Choice(["lemma31", "lemma32"]))
@click.option("--field", "field_spec", required=True)
@click.option("--subfield", type=int, default=None)
@click.option("--k", required=True, type=int)
@click.option("--t", required=True, type=int)
@click.option("--h", required=True, type=int)
@click.option("--eta-range", default=None,
              help="'nonzero' (default), 'outside-subfield', or comma-separated list")
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="output prefix; writes PREFIX.json and PREFIX.csv")
def sweep(family, field_spec, subfield, k, t, h, eta_range, out):
    """Sweep eta over a range and report every code's analysis."""
    if eta_range is None:
        eta_range = "outside-subfield" if subfield is not None else "nonzero"
    elif eta_range not in ("nonzero", "outside-subfield"):
        eta_range = [s for s in eta_range.split(",") if s]
    spec = SearchSpec(field=field_spec, family=family, k=k, t=t, h=h,
                      subfield=subfield, eta_range=eta_range)
    try:
        result = sweep_eta(spec)
    except (TrsError, FieldError) as exc:
        _fail(_EXIT_PARAMS, str(exc))

    prefix = Path(out)
    if prefix.suffix in (".json", ".csv"):
        prefix = prefix.with_suffix("")
    json_path = prefix.with_suffix(".json")
    csv_path = prefix.with_suffix(".csv")
    json_path.write_text(_dump_json(result.to_dict()), encoding="utf-8")
    with csv_path.open("w", encoding="utf-8", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(result.csv_rows())

    s = result.summary
    click.echo(
        f"swept {s['total']} eta values: {s['mds']} MDS, {s['one_hull']} with "
        f"one-dimensional hull, {s['certified_non_grs']} certified non-GRS "
        f"-> {json_path}, {csv_path}")


@main.command("verify-paper")
@click.option("--example", required=True,
              type=click.Choice(list(EXAMPLE_IDS) + ["all"]))
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None,
              help="also write the machine-readable claim list to this path")
def verify_paper(example, json_out):
    """Re-derive the published reference examples claim by claim."""
    ids = list(EXAMPLE_IDS) if example == "all" else [example]
    reports = [verify_example(i) for i in ids]

    width = max(len(c.claim) for r in reports for c in r.claims) + 2
    for rep in reports:
        click.echo(f"{rep.example}:")
        for c in rep.claims:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{status}] {c.claim:<{width}} {c.observed}"
            click.echo(line)
            if c.note:
                click.echo(f"         note: {c.note}")
    all_pass = all(r.passed for r in reports)
    click.echo("result: " + ("all claims PASS" if all_pass else "some claims FAIL"))

    if json_out:
        payload = {"examples": [r.to_dict() for r in reports], "passed": all_pass}
        Path(json_out).write_text(_dump_json(payload), encoding="utf-8")
    sys.exit(0 if all_pass else 1)


@main.command("field-info")
@click.option("--field", "field_spec", required=True)
def field_info(field_spec):
    """Describe a field: order, modulus, primitive element, subfields."""
    try:
        f = make_field(field_spec)
    except FieldError as exc:
        _fail(_EXIT_PARAMS, str(exc))
    info = {
        "field": f.spec_string(),
        "q": f.q,
        "p": f.p,
        "m": f.m,
        "modulus": list(f.modulus),
        "gamma": str(f.gamma),
        "subfield_orders": f.subfield_orders(),
    }
    click.echo(_dump_json(info), nl=False)


if __name__ == "__main__":
    main()
