"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (non-empty diff, violated law),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .autlaws import Tag, type_admissible
from .case412 import chain_to_json, chain_to_text, run_412_chain
from .exactmath import is_prime
from .obstruction import check_line_transitivity, check_point_transitivity
from .params import GqOrder, basic_laws
from .scan import (
    GoldenFormatError,
    bundled_golden_text,
    compare_to_golden,
    normalize_golden,
    parse_golden,
    scan,
    to_csv,
    to_json,
    to_text,
)
from .witness import (
    axiom_violations,
    build_doily,
    build_dual_grid,
    build_grid,
    induced_automorphisms,
    sample_symmetries,
    verify_all,
)

FORMATS = ("text", "csv", "json")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _t_max(text: str) -> int:
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"--t-max must be >= 2, got {v}")
    return v


def _prime(text: str) -> int:
    v = _positive(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _flatten(prefix: str, d: dict, out: list[tuple[str, object]]) -> None:
    for k, v in d.items():
        key = f"{prefix}.{k}" if prefix else k
        if isinstance(v, dict):
            _flatten(key, v, out)
        elif isinstance(v, (list, tuple)):
            out.append((key, " ".join(str(x) for x in v)))
        else:
            out.append((key, "" if v is None else v))


def _emit(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=1, sort_keys=True) + "\n"
    rows: list[tuple[str, object]] = []
    _flatten("", data, rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("field", "value"))
        w.writerows(rows)
        return buf.getvalue()
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def cmd_check(args) -> int:
    data = {}
    for o in (GqOrder(args.s, args.t), GqOrder(args.t, args.s)):
        key = f"{o.s},{o.t}"
        if key in data:
            continue
        data[key] = {
            "thick": o.thick,
            "basic_laws": basic_laws(o).as_dict(),
            "points": check_point_transitivity(o).as_dict(),
            "lines": check_line_transitivity(o).as_dict(),
        }
        for side in ("points", "lines"):
            data[key][side].pop("order")
    sys.stdout.write(_emit(data, args.format))
    return 0


def cmd_scan(args) -> int:
    golden = None
    if args.golden:
        try:
            text = bundled_golden_text() if args.golden == "bundled" else open(args.golden).read()
            golden = parse_golden(text)
        except (OSError, GoldenFormatError) as exc:
            print(f"error: cannot read golden file: {exc}", file=sys.stderr)
            return 2
    start = time.perf_counter()
    rows = scan(args.t_max, workers=args.workers)
    elapsed = time.perf_counter() - start
    render = {"text": to_text, "csv": to_csv, "json": to_json}[args.format]
    if golden is None:
        sys.stdout.write(render(rows))
        return 0
    if args.normalize:
        golden = normalize_golden(golden)
    diff = compare_to_golden(rows, golden)
    for line in diff.lines():
        print(line)
    print(f"{len(rows)} computed rows, {len(golden)} golden rows, "
          f"{len(diff.lines())} differences ({elapsed:.2f}s)")
    return 0 if diff.empty else 1


def cmd_types(args) -> int:
    o = GqOrder(args.s, args.t)
    if not o.thick:
        print(f"error: order {o} is not thick", file=sys.stderr)
        return 2
    adm = type_admissible(o, args.p)
    names = [str(t) for t in Tag if t in adm.admissible]
    note = " (alpha0=0 forced)" if adm.admissible and adm.fixes_no_point else ""
    print(f"order {o}, p={args.p}")
    print(f"admissible: {', '.join(names) if names else 'none'}{note}")
    for tag, v in adm.verdicts.items():
        if v.admissible:
            extra = f" candidates={list(v.candidates)}" if v.candidates else ""
            print(f"  {tag}: ok{extra}")
        else:
            print(f"  {tag}: excluded, {v.reason}")
    return 0


def cmd_case412(args) -> int:
    steps = run_412_chain()
    if args.format == "json":
        sys.stdout.write(chain_to_json(steps))
    else:
        sys.stdout.write(chain_to_text(steps))
    return 0 if steps[-1].verified else 1


def _model(args):
    if args.model == "doily":
        return build_doily()
    if args.model == "grid":
        return build_grid(args.size)
    return build_dual_grid(args.size)


def cmd_witness(args) -> int:
    model = _model(args)
    if args.dump:
        sys.stdout.write(model.to_json())
        return 0
    bad = axiom_violations(model)
    print(f"{model!r}: axioms {'ok' if not bad else 'VIOLATED'}")
    for b in bad:
        print(f"  {b}")
    if not args.verify_all:
        return 0 if not bad else 1
    bases = None
    if model.kind != "doily" and args.size > 3:
        bases = sample_symmetries(model, args.samples, seed=args.seed)
    summary = verify_all(model, induced_automorphisms(model, bases))
    for base, laws in summary.failures:
        print(f"  violation: {base}: {', '.join(laws)}")
    if summary.tag_counts:
        print("prime-order fixed types: " + ", ".join(f"{k}={v}" for k, v in sorted(summary.tag_counts.items())))
    print(summary.line())
    return 0 if summary.ok and not bad else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsieve", description="Prime-order automorphism obstructions "
                                 "for generalized quadrangle orders.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parameter laws and transitivity obstructions for (s,t) and its dual")
    p.add_argument("s", type=_positive)
    p.add_argument("t", type=_positive)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="all orders with t <= t-max excluded from point-transitivity")
    p.add_argument("--t-max", type=_t_max, default=100)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--golden", metavar="PATH", help="compare against a golden table ('bundled' for the shipped one)")
    p.add_argument("--normalize", action="store_true", help="dedupe golden rows and read ** as ***")
    p.add_argument("--workers", type=_positive, default=None, help="processes (default: $QSIEVE_THREADS or 1)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("types", help="admissible fixed-substructure types for an element of prime order p")
    p.add_argument("s", type=_positive)
    p.add_argument("t", type=_positive)
    p.add_argument("p", type=_prime)
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("case412", help="deduction chain for order (4,12)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_case412)

    p = sub.add_parser("witness", help="check automorphism laws on explicit small models")
    p.add_argument("--model", choices=("doily", "grid", "dual-grid"), default="doily")
    p.add_argument("--size", type=_positive, default=2, help="s for grids, t for dual grids")
    p.add_argument("--verify-all", action="store_true")
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump", action="store_true", help="print the model as JSON")
    p.set_defaults(func=cmd_witness)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
