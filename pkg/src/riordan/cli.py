"""Command-line interface: expansion, transforms, Hankel tools, verification.

Exit codes: 0 success, 2 usage error, 3 expression parse error, 4 violated
mathematical precondition, 5 verification failure under --strict.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import families
from .arrays import RiordanError
from .gf import ParseError, expand_gf
from .hankel import (
    FitError,
    HankelError,
    JFraction,
    fit_rational_gf,
    hankel_transform,
)
from .oeis import oeis_lookup
from .series import SeriesError
from .transforms import (
    c_inverse,
    c_transform,
    sequence_from_json,
    sequence_to_csv,
    sequence_to_series,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_MATH = 4
EXIT_VERIFY = 5

DEFAULT_ORDER = families.DEFAULT_ORDER
DEFAULT_CACHE_DIR = ".oeis-cache"
ORDER_ENV = "RIORDAN_ORDER"
CACHE_DIR_ENV = "RIORDAN_CACHE_DIR"

VERIFY_IDS = ("5", "6", "6x2", "7", "8", "9", "10", "trees", "equal-hankel",
              "all")


@dataclass
class CliConfig:
    """Resolved settings shared by every subcommand."""

    order: int = DEFAULT_ORDER
    output_format: str = "text"
    oeis_mode: str = "offline"
    cache_dir: str = DEFAULT_CACHE_DIR
    strict: bool = False
    timestamp: bool = True

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.oeis_mode not in ("offline", "online"):
            raise ValueError(f"unknown OEIS mode {self.oeis_mode!r}")


def _env_default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_ENV} must be an integer, got {raw!r}")


def _env_default_cache_dir() -> str:
    return os.environ.get(CACHE_DIR_ENV, DEFAULT_CACHE_DIR)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help=f"series truncation order (default {DEFAULT_ORDER}; "
                             f"env {ORDER_ENV})")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="text", help="output format")
    common.add_argument("--cache-dir", default=None,
                        help=f"OEIS cache directory (env {CACHE_DIR_ENV})")
    common.add_argument("--strict", action="store_true",
                        help="exit nonzero if any verification claim fails")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp field from JSON output")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--offline", dest="oeis_mode", action="store_const",
                      const="offline", help="serve OEIS lookups from cache only")
    mode.add_argument("--online", dest="oeis_mode", action="store_const",
                      const="online", help="allow OEIS network lookups")
    common.set_defaults(oeis_mode="offline")

    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact central-transform and Hankel-transform toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="expand a generating-function expression")
    p.add_argument("gf", help="expression, e.g. '(1+x)/(1-x)' or 'c(x)'")

    for name, doc in (("ctransform", "apply the central transform"),
                      ("cinverse", "apply the inverse central transform")):
        p = sub.add_parser(name, parents=[common], help=doc)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("gf", nargs="?", help="generating-function expression")
        src.add_argument("--file", help="JSON file with an array of decimal "
                                        "string terms")

    p = sub.add_parser("hankel", parents=[common],
                       help="Hankel determinant prefix of a sequence")
    _add_sequence_arguments(p)
    p.add_argument("--count", type=int, default=None,
                   help="number of determinants (default: as many as the "
                        "terms support)")

    p = sub.add_parser("fitgf", parents=[common],
                       help="fit a rational generating function to a sequence")
    _add_sequence_arguments(p)
    p.add_argument("--max-num-deg", type=int, default=6)
    p.add_argument("--max-den-deg", type=int, default=7)

    p = sub.add_parser("jfrac", parents=[common],
                       help="expand a continued fraction with x^2 couplings")
    p.add_argument("--linear", required=True,
                   help="comma-separated linear coefficients b0,b1,...")
    p.add_argument("--quadratic", default="",
                   help="comma-separated x^2 coefficients (one fewer)")

    p = sub.add_parser("verify", parents=[common],
                       help="check a family of claims")
    p.add_argument("id", choices=VERIFY_IDS)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--grid", default=None, metavar="MIN:MAX",
                   help="parameter grid bounds (default -3:3)")
    p.add_argument("--prefix", type=int, default=families.DEFAULT_PREFIX,
                   help="Hankel prefix length")

    p = sub.add_parser("table", parents=[common],
                       help="reproduce a printed table")
    p.add_argument("which", choices=("4", "9", "trees"))

    p = sub.add_parser("identify", parents=[common],
                       help="look up a sequence prefix in the OEIS")
    _add_sequence_arguments(p)

    return parser


def _add_sequence_arguments(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("terms", nargs="?",
                     help="comma-separated integer terms")
    src.add_argument("--file", help="JSON file with an array of decimal "
                                    "string terms")


def _config_from_args(args) -> CliConfig:
    order = args.order if args.order is not None else _env_default_order()
    cache_dir = (args.cache_dir if args.cache_dir is not None
                 else _env_default_cache_dir())
    return CliConfig(
        order=order,
        output_format=args.format,
        oeis_mode=args.oeis_mode,
        cache_dir=cache_dir,
        strict=args.strict,
        timestamp=not args.no_timestamp,
    )


def _read_sequence(args) -> list:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return sequence_from_json(fh.read())
    return [int(t) for t in args.terms.replace(",", " ").split()]


def _emit(config: CliConfig, command: str, values=None, payload=None,
          out=None):
    """Write one report in the configured format."""
    out = out if out is not None else sys.stdout
    if config.output_format == "json":
        doc = {"command": command}
        if config.timestamp:
            doc["timestamp"] = (
                datetime.datetime.now(datetime.timezone.utc).isoformat()
            )
        if values is not None:
            doc["values"] = [str(v) for v in values]
        if payload:
            doc.update(payload)
        out.write(json.dumps(doc) + "\n")
    elif config.output_format == "csv":
        if values is not None:
            for v in values:
                out.write(f"{v}\n")
        elif payload:
            for key, val in payload.items():
                out.write(f"{key},{val}\n")
    else:
        if values is not None:
            out.write(", ".join(str(v) for v in values) + "\n")
        if payload:
            for key, val in payload.items():
                if key == "text":
                    out.write(f"{val}\n")
                else:
                    out.write(f"{key}: {val}\n")


# -- subcommand implementations ------------------------------------------

def _series_source(args, config: CliConfig):
    if getattr(args, "file", None):
        terms = _read_sequence(args)
        return sequence_to_series(terms, max(len(terms) - 1, config.order))
    return expand_gf(args.gf, config.order)


def _cmd_expand(args, config, out):
    series = expand_gf(args.gf, config.order)
    _emit(config, "expand", values=series.prefix(config.order + 1), out=out)
    return EXIT_OK


def _cmd_ctransform(args, config, out):
    image = c_transform(_series_source(args, config))
    _emit(config, "ctransform", values=image.prefix(image.order + 1), out=out)
    return EXIT_OK


def _cmd_cinverse(args, config, out):
    pre = c_inverse(_series_source(args, config))
    _emit(config, "cinverse", values=pre.prefix(pre.order + 1), out=out)
    return EXIT_OK


def _cmd_hankel(args, config, out):
    terms = _read_sequence(args)
    count = args.count if args.count is not None else (len(terms) + 1) // 2
    h = hankel_transform(terms, count)
    _emit(config, "hankel", values=h, out=out)
    return EXIT_OK


def _cmd_fitgf(args, config, out):
    terms = _read_sequence(args)
    gf = fit_rational_gf(terms, args.max_num_deg, args.max_den_deg)
    _emit(config, "fitgf", payload={"text": gf.to_text()}, out=out)
    return EXIT_OK


def _cmd_jfrac(args, config, out):
    linear = tuple(int(t) for t in args.linear.split(","))
    quadratic = tuple(
        int(t) for t in args.quadratic.split(",") if t.strip()
    )
    jf = JFraction(linear=linear, quadratic=quadratic)
    series = jf.expand(min(config.order, jf.reliable_order()))
    _emit(config, "jfrac", values=series.prefix(series.order + 1), out=out)
    return EXIT_OK


def _verify_reports(args, config: CliConfig):
    prefix, order = args.prefix, config.order
    if args.grid is not None:
        lo, hi = args.grid.split(":")
        grid = range(int(lo), int(hi) + 1)
    else:
        grid = families.GRID

    def cells(x, y):
        xs = [x] if x is not None else grid
        ys = [y] if y is not None else grid
        return [(u, v) for u in xs for v in ys]

    vid = args.id
    reports = []
    if vid == "5":
        for a, b in cells(args.a, args.b):
            reports += families.verify_family_ratio_linear(a, b, prefix, order)
        if args.a is None and args.b is None:
            reports += families.verify_printed_ratio_linear(prefix, order)
    elif vid == "6":
        for a, b in cells(args.a, args.b):
            reports += families.verify_family_quadratic(a, b, prefix, order)
        if args.a is None and args.b is None:
            reports += families.verify_printed_quadratic(prefix, order)
    elif vid == "6x2":
        for a in ([args.a] if args.a is not None else grid):
            reports += families.verify_family_invert(a, prefix, order)
    elif vid == "7":
        for a in ([args.a] if args.a is not None else grid):
            reports += families.verify_family_cubic(a, prefix, order)
        if args.a is None:
            reports += families.verify_printed_cubic(prefix, order)
    elif vid == "8":
        for r, s in cells(args.r, args.s):
            reports += families.verify_family_lucas(r, s, prefix, order)
        if args.r is None and args.s is None:
            reports += families.verify_printed_lucas(prefix, order)
    elif vid == "9":
        for r in ([args.r] if args.r is not None else range(1, 9)):
            reports += families.verify_family_aerated(r, prefix, order)
        if args.r is None:
            reports += families.verify_aerated_value_sequences()
    elif vid == "10":
        for r in ([args.r] if args.r is not None else range(0, 4)):
            reports += families.narayana_preimage(r, prefix)
    elif vid == "trees":
        reports += families.verify_tree_mutation_table(prefix)
    elif vid == "equal-hankel":
        reports += families.verify_equal_hankel()
    else:
        reports += families.verify_all(prefix, order, grid)
    return reports


def _cmd_verify(args, config, out):
    reports = _verify_reports(args, config)
    ok = families.all_pass(reports)
    if config.output_format == "json":
        payload = {
            "reports": [json.loads(r.to_json_line()) for r in reports],
            "passed": ok,
        }
        _emit(config, "verify", payload=payload, out=out)
    else:
        out.write(families.reports_to_text(reports) + "\n")
    if config.strict and not ok:
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_table(args, config, out):
    order = config.order
    rows = []
    if args.which == "4":
        for g_text, image_text, hankel_text in families.SIMPLE_TRANSFORM_TABLE:
            image = c_transform(expand_gf(g_text, order))
            terms = image.int_prefix(10)
            h = hankel_transform(image.int_prefix(19), 10)
            rows.append({
                "input": g_text,
                "image": ", ".join(map(str, terms)),
                "hankel": ", ".join(map(str, h)),
                "hankel_gf": hankel_text,
            })
    elif args.which == "9":
        for r, gf_text in families.AERATED_TABLE.items():
            rows.append({"input": f"(1+x^{r})/(1-x^{r})", "image_gf": gf_text})
    else:
        for name, pre_text in (
            ("A000346", "(1-x)/(1+x)^2"),
            ("A001700", "1/(1+x)"),
            ("A002057", "1/((1-x)*(1+x)^3)"),
            ("A007852", "(1-x*c(x))/(1-x)"),
            ("A007856", "1-x*c(x)"),
            ("A097070", "(1-x-x^2+x^3)/(1-x+2*x^2)"),
            ("A097613", "(1+x)/(1+x+x^2)"),
            ("A114121", "1-x^2"),
            ("A243585", "sqrt(1-4*x)"),
            ("A257589", "(1-x)^2/((1+x)*(1+4*x-x^2))"),
        ):
            image = c_transform(expand_gf(pre_text, order))
            rows.append({
                "sequence": name,
                "preimage_gf": pre_text,
                "image": ", ".join(map(str, image.int_prefix(8))),
            })
    if config.output_format == "json":
        _emit(config, "table", payload={"rows": rows}, out=out)
    elif config.output_format == "csv":
        for row in rows:
            out.write(",".join(f'"{v}"' for v in row.values()) + "\n")
    else:
        for row in rows:
            out.write(" | ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return EXIT_OK


def _cmd_identify(args, config, out):
    terms = _read_sequence(args)
    result = oeis_lookup(terms, mode=config.oeis_mode,
                         cache_dir=config.cache_dir)
    if config.output_format == "json":
        payload = {
            "query": [str(t) for t in result.query_terms],
            "matches": [{"number": n, "name": name}
                        for n, name in result.matches],
            "source": result.source,
            "identified": result.identified,
        }
        _emit(config, "identify", payload=payload, out=out)
    else:
        out.write(result.to_text() + "\n")
    return EXIT_OK


_COMMANDS = {
    "expand": _cmd_expand,
    "ctransform": _cmd_ctransform,
    "cinverse": _cmd_cinverse,
    "hankel": _cmd_hankel,
    "fitgf": _cmd_fitgf,
    "jfrac": _cmd_jfrac,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "identify": _cmd_identify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else EXIT_OK
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, config, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (SeriesError, HankelError, RiordanError, FitError) as exc:
        err.write(f"math error: {exc}\n")
        return EXIT_MATH
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
