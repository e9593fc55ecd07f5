"""``cy2`` command line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .category import CategoryError, CategorySpec, get_tables
from .counting import count_report
from .hearts import heart_report
from .render import RenderSpec, render_svg
from .torsion import (
    TorsionPairRecord,
    enumerate_brute_force,
    enumerate_torsion_pairs,
    is_torsion_half,
    make_record,
    wing_decomposition,
)

log = logging.getLogger("cy2torsion")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cy2", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def category_args(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--family", choices=["A", "D"], required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)

    def set_arg(sp: argparse.ArgumentParser, required: bool = True) -> None:
        sp.add_argument(
            "--set",
            dest="set_json",
            required=required,
            help='JSON list of orbit representatives, e.g. "[[1,3],[1,4]]" or \'["(1,5)g"]\'',
        )

    sp = sub.add_parser("build", help="dump the indecomposables and Hom/Ext tables")
    category_args(sp)
    sp.add_argument("--out")

    sp = sub.add_parser("enumerate", help="list every torsion pair as JSON records")
    category_args(sp)
    sp.add_argument("--out")
    sp.add_argument("--hearts", action="store_true", help="attach core/heart data")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--brute-force", action="store_true", help="test all 2^k subsets instead")

    sp = sub.add_parser("count", help="closed-form count, optionally checked by enumeration")
    category_args(sp)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("perp", help="Hom-perpendicular of a set, optionally shifted")
    category_args(sp)
    set_arg(sp)
    sp.add_argument("--side", choices=["right", "left"], default="right")
    sp.add_argument("--shift", type=int, default=0)

    sp = sub.add_parser("wings", help="wing decomposition of a rigid torsion half")
    category_args(sp)
    set_arg(sp)

    sp = sub.add_parser("hearts", help="core and End(I) data for one half or for all")
    category_args(sp)
    set_arg(sp, required=False)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")

    sp = sub.add_parser("render", help="SVG drawing of the lifted diagram")
    category_args(sp)
    set_arg(sp, required=False)
    sp.add_argument("--out", required=True)
    sp.add_argument("--size", type=int, default=400)

    sp = sub.add_parser("verify", help="run the acceptance grid")
    sp.add_argument("--workers", type=int, default=1)

    return p


def _spec(args) -> CategorySpec:
    try:
        return CategorySpec(args.family, args.n, args.t)
    except CategoryError as exc:
        raise UsageError(str(exc)) from exc


def _read_set(tables, raw: str | None) -> int:
    if raw is None:
        return 0
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--set is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise UsageError("--set must be a JSON list")
    try:
        return tables.parse_set(data)
    except CategoryError as exc:
        raise UsageError(str(exc)) from exc


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cache_path(spec: CategorySpec) -> Path | None:
    root = os.environ.get("CY2_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"{spec.family}-{spec.n}-{spec.t}-{__version__}.json"


def load_records(spec: CategorySpec, workers: int = 1, brute_force: bool = False):
    tables = get_tables(spec)
    if brute_force:
        return enumerate_brute_force(tables)
    path = _cache_path(spec)
    if path is not None and path.exists():
        try:
            data = json.loads(path.read_text())
            return [TorsionPairRecord.from_json(d, tables) for d in data]
        except (ValueError, KeyError, CategoryError):
            log.warning("ignoring unreadable cache file %s", path)
    records = enumerate_torsion_pairs(tables, workers=workers)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps([r.to_json() for r in records]))
        tmp.replace(path)
    return records


def cmd_build(args) -> int:
    _emit(get_tables(_spec(args)).to_json(), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = _spec(args)
    tables = get_tables(spec)
    if args.brute_force and tables.size > 24:
        raise UsageError(f"{spec} has {tables.size} indecomposables; too many for --brute-force")
    records = load_records(spec, args.workers, args.brute_force)
    if args.hearts:
        for r in records:
            r.heart = heart_report(r, tables).to_json()
    _emit([r.to_json() for r in records], args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    report = count_report(_spec(args), verify=args.verify, workers=args.workers)
    _emit(report.to_json(), None)
    return EXIT_FAIL if report.agree is False else EXIT_OK


def cmd_perp(args) -> int:
    tables = get_tables(_spec(args))
    x = _read_set(tables, args.set_json)
    out = tables.right_perp(x) if args.side == "right" else tables.left_perp(x)
    _emit(tables.labels(tables.shift(out, args.shift)), None)
    return EXIT_OK


def _half(tables, raw: str | None) -> int:
    x = _read_set(tables, raw)
    if not is_torsion_half(tables, x):
        raise UsageError(f"{tables.labels(x)} is not a torsion half")
    return x


def cmd_wings(args) -> int:
    tables = get_tables(_spec(args))
    x = _half(tables, args.set_json)
    try:
        wings = wing_decomposition(tables, x)
    except CategoryError as exc:
        raise UsageError(str(exc)) from exc
    _emit(
        [
            {"apex": tables.indecs[w.apex].label, "members": tables.labels(w.members)}
            for w in wings
        ],
        None,
    )
    return EXIT_OK


def cmd_hearts(args) -> int:
    tables = get_tables(_spec(args))
    if args.set_json is not None:
        rec = make_record(tables, _half(tables, args.set_json), with_wings=False)
        payload = heart_report(rec, tables).to_json()
        payload["core_labels"] = tables.labels(rec.core)
    else:
        payload = []
        for rec in load_records(tables.spec, args.workers):
            entry = heart_report(rec, tables).to_json()
            entry["x"] = rec.to_json()["x"]
            payload.append(entry)
    _emit(payload, args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    spec = _spec(args)
    tables = get_tables(spec)
    x = _read_set(tables, args.set_json)
    title = f"{spec}: " + ", ".join(tables.labels(x))
    svg = render_svg(RenderSpec(spec.ngon, tables.lift(x), size=args.size, title=title))
    Path(args.out).write_text(svg)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import format_table, run_all

    checks = run_all(workers=args.workers)
    print(format_table(checks))
    failed = sum(1 for _, ok, _ in checks if not ok)
    print(f"{len(checks) - failed}/{len(checks)} passed")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "perp": cmd_perp,
    "wings": cmd_wings,
    "hearts": cmd_hearts,
    "render": cmd_render,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
