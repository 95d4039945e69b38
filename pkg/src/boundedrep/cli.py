"""Command line: represent, scan, equidist, class, enumerate, certify.

Exit status is 0 on success, 2 on invalid input and 3 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path as FsPath

from . import pipeline
from .classgeom import class_data
from .discenum import EnumWindow, enumerate_forms, is_square
from .errors import ConsistencyError, InvalidInputError
from .region import DEFAULT_RADIUS, certified_patch, certify_patch

SCAN_COLUMNS = ["n", "outcome", "path", "x", "y", "z"]
EQUIDIST_COLUMNS = ["d", "lambda_K", "lambda_patch", "vol_proxy", "ratio", "normalized_K"]
CERTIFY_COLUMNS = ["map", "functional", "center_value", "norm", "slack"]


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    return value


def _writer(stream):
    return csv.writer(stream, lineterminator="\n")


def _open_out(path: str):
    return open(path, "w", encoding="utf-8", newline="")


def _write_summary(out: str, summary: dict) -> None:
    text = json.dumps(summary, indent=2)
    FsPath(out + ".summary.json").write_text(text + "\n", encoding="utf-8")
    print(text, file=sys.stderr)


def _result_row(res: pipeline.RepresentationResult) -> list:
    t = res.triple
    return [res.n, res.outcome, res.path.value if res.path else "",
            *(t.xyz() if t else ("", "", ""))]


def cmd_represent(args) -> None:
    res = pipeline.represent(args.n, certified_patch(args.radius))
    w = _writer(sys.stdout)
    w.writerow(SCAN_COLUMNS)
    w.writerow(_result_row(res))


def cmd_scan(args) -> None:
    report = pipeline.scan(args.lo, args.hi, workers=args.jobs, radius=args.radius)
    with _open_out(args.out) as fh:
        w = _writer(fh)
        w.writerow(SCAN_COLUMNS)
        for row in report.rows:
            w.writerow(_result_row(row.result))
    _write_summary(args.out, report.summary())


def cmd_equidist(args) -> None:
    if args.step != "even-nonsquare":
        raise InvalidInputError(f"unsupported step {args.step!r}")
    ds = pipeline.even_nonsquare_discriminants(args.d_min, args.d_max)
    report = pipeline.equidist(ds, workers=args.jobs, radius=args.radius)
    with _open_out(args.out) as fh:
        w = _writer(fh)
        w.writerow(EQUIDIST_COLUMNS)
        for r in report.rows:
            w.writerow([r.d, r.lambda_K, r.lambda_patch, repr(r.vol_proxy),
                        repr(r.ratio_patch_over_K), repr(r.normalized_K)])
    _write_summary(args.out, report.summary())


def cmd_class(args) -> None:
    print(json.dumps(class_data(args.d).as_dict()))


def cmd_enumerate(args) -> None:
    region = certified_patch(args.radius) if args.region == "patch" else args.region
    window = EnumWindow(args.d, region)
    if is_square(args.d):
        print(f"square_discriminant: d={args.d}", file=sys.stderr)
    forms = enumerate_forms(window)
    if args.count_only:
        print(sum(1 for _ in forms))
        return
    w = _writer(sys.stdout)
    w.writerow(["a", "b", "c"])
    for f in forms:
        w.writerow(f)


def cmd_certify(args) -> None:
    report = certify_patch(args.radius)
    w = _writer(sys.stdout)
    w.writerow(CERTIFY_COLUMNS)
    for r in report.rows:
        w.writerow([r.map, r.functional, str(r.center_value), repr(r.norm), repr(r.slack)])
    print(f"radius {report.radius}: {'certified' if report.passed else 'NOT certified'}",
          file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boundedrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def radius_opt(sp):
        sp.add_argument("--radius", type=_fraction, default=DEFAULT_RADIUS,
                        help="patch radius p/q (default 1/40); must pass certification")

    sp = sub.add_parser("represent", help="represent one n")
    sp.add_argument("--n", type=int, required=True)
    radius_opt(sp)
    sp.set_defaults(func=cmd_represent)

    sp = sub.add_parser("scan", help="solve every n in a range and compare with the oracle")
    sp.add_argument("--from", dest="lo", type=int, required=True)
    sp.add_argument("--to", dest="hi", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", required=True)
    radius_opt(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("equidist", help="point counts against the volume proxy")
    sp.add_argument("--d-min", type=int, required=True)
    sp.add_argument("--d-max", type=int, required=True)
    sp.add_argument("--step", default="even-nonsquare", choices=["even-nonsquare"])
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", required=True)
    radius_opt(sp)
    sp.set_defaults(func=cmd_equidist)

    sp = sub.add_parser("class", help="class number, automorph and regulator of d")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_class)

    sp = sub.add_parser("enumerate", help="primitive forms of discriminant d in a region")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--region", choices=["box", "K", "patch"], default="box")
    sp.add_argument("--count-only", action="store_true")
    radius_opt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("certify", help="certify the ball patch of a given radius")
    sp.add_argument("--radius", type=_fraction, default=DEFAULT_RADIUS)
    sp.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
